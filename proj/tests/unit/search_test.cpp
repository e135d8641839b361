#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cfga/errors.hpp"
#include "cfga/search.hpp"
#include "cfga/text.hpp"
#include "test_support.hpp"

using namespace cfga;
using cfga::test::fixed_corpus;
using cfga::test::g_a;
using cfga::test::g_ab;
using cfga::test::random_walk;

namespace {

std::set<std::string> form_set(const std::vector<RankedForm>& forms) {
  std::set<std::string> out;
  for (const auto& rf : forms) out.insert(form_text(rf.form));
  return out;
}

}  // namespace

TEST_CASE("derive_search finds the minimal two-step derivation") {
  const auto d = derive_search(g_ab(), parse_form("S"), parse_form("'a' 'b'"),
                               {2, 4});
  REQUIRE(d.has_value());
  CHECK(d->step_count() == 2);
  const CheckResult r = check_derivation(g_ab(), *d);
  REQUIRE(r.accepted);
  CHECK(form_text(r.final_form) == "'a' 'b'");
}

TEST_CASE("derive_search is reflexive at zero steps") {
  const SententialForm s = parse_form("'a' S 'b'");
  const auto d = derive_search(g_ab(), s, s, {0, s.size()});
  REQUIRE(d.has_value());
  CHECK(d->step_count() == 0);
  CHECK(d->start == s);
}

TEST_CASE("derive_search exhaustively refutes unbalanced targets") {
  CHECK_FALSE(derive_search(g_ab(), parse_form("S"), parse_form("'a' 'a' 'b'"),
                            {10, 8})
                  .has_value());
}

TEST_CASE("derive_search rejects bounds below the endpoint lengths") {
  CHECK_THROWS_AS(derive_search(g_ab(), parse_form("S"),
                                parse_form("'a' 'a' 'b' 'b'"), {4, 3}),
                  InvalidInput);
}

TEST_CASE("enumerate_forms at zero steps is the start form") {
  const auto forms = enumerate_forms(g_ab(), {0, 4});
  REQUIRE(forms.size() == 1);
  CHECK(form_text(forms[0].form) == "S");
  CHECK(forms[0].steps == 0);
}

TEST_CASE("enumerate_forms of G_ab at (2,4) matches the hand-unrolled search") {
  const auto forms = enumerate_forms(g_ab(), {2, 4});
  REQUIRE(forms.size() == 4);
  // Sorted shortlex over the serialized form.
  CHECK(form_text(forms[0].form) == "");
  CHECK(forms[0].steps == 1);
  CHECK(form_text(forms[1].form) == "S");
  CHECK(forms[1].steps == 0);
  CHECK(form_text(forms[2].form) == "'a' 'b'");
  CHECK(forms[2].steps == 2);
  CHECK(form_text(forms[3].form) == "'a' S 'b'");
  CHECK(forms[3].steps == 1);
}

TEST_CASE("enumerate_forms of a single-rule grammar") {
  const auto forms = enumerate_forms(g_a(), {1, 2});
  REQUIRE(forms.size() == 2);
  CHECK(form_text(forms[0].form) == "S");
  CHECK(form_text(forms[1].form) == "'a'");
  CHECK(forms[1].steps == 1);
}

TEST_CASE("generates wraps derive_search from the start symbol") {
  const auto d = generates(g_ab(), parse_form("'a' 'b'"), {4, 4});
  REQUIRE(d.has_value());
  CHECK(d->step_count() == 2);

  const auto refl = generates(g_ab(), parse_form("S"), {0, 1});
  REQUIRE(refl.has_value());
  CHECK(refl->step_count() == 0);

  CHECK_FALSE(generates(g_ab(), parse_form("'b' 'a'"), {10, 8}).has_value());
}

TEST_CASE("sentences filters terminal-only forms") {
  const auto s36 = sentences(g_ab(), {3, 6});
  REQUIRE(s36.size() == 3);
  CHECK(form_text(s36[0]) == "");
  CHECK(form_text(s36[1]) == "'a' 'b'");
  CHECK(form_text(s36[2]) == "'a' 'a' 'b' 'b'");

  const auto s16 = sentences(g_ab(), {1, 6});
  REQUIRE(s16.size() == 1);
  CHECK(s16[0].empty());

  const auto sa = sentences(g_a(), {1, 1});
  REQUIRE(sa.size() == 1);
  CHECK(form_text(sa[0]) == "'a'");
}

TEST_CASE("exceeding the explored-form cap is an error, not absence") {
  CHECK_THROWS_AS(enumerate_forms(g_ab(), {10, 10, 3}), BudgetExceeded);
  try {
    derive_search(g_ab(), parse_form("S"), parse_form("'b' 'a'"), {10, 8, 2});
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.cap() == 2);
    CHECK(e.explored() > e.cap());
  }
}

TEST_CASE("oracle soundness: every found derivation checks to its target") {
  for (const auto& [name, g] : fixed_corpus()) {
    CAPTURE(name);
    for (const RankedForm& rf : enumerate_forms(g, {4, 8})) {
      const auto d = generates(g, rf.form, {4, 8});
      REQUIRE(d.has_value());
      CHECK(d->step_count() == rf.steps);
      const CheckResult r = check_derivation(g, *d);
      REQUIRE(r.accepted);
      CHECK(r.final_form == rf.form);
    }
  }
}

TEST_CASE("oracle bounded completeness against hand-built certificates") {
  std::mt19937_64 rng(7);
  for (const auto& [name, g] : fixed_corpus()) {
    CAPTURE(name);
    for (int i = 0; i < 40; ++i) {
      const Derivation d =
          random_walk(g, {Symbol::nt(g.start)}, rng() % 5, rng);
      // Track the longest intermediate form the certificate passes through.
      SententialForm form = d.start;
      std::size_t longest = form.size();
      for (const Step& s : d.steps) {
        form = apply_rule_at(g, form, s.pos, s.rule);
        longest = std::max(longest, form.size());
      }
      const auto found =
          derive_search(g, d.start, form, {d.step_count(), longest});
      REQUIRE(found.has_value());
      CHECK(found->step_count() <= d.step_count());
    }
  }
}

TEST_CASE("enumerate_forms is monotone in the step bound") {
  for (const auto& [name, g] : fixed_corpus()) {
    CAPTURE(name);
    for (std::size_t k = 0; k < 5; ++k) {
      const auto smaller = form_set(enumerate_forms(g, {k, 8}));
      const auto larger = form_set(enumerate_forms(g, {k + 1, 8}));
      CHECK(std::includes(larger.begin(), larger.end(), smaller.begin(),
                          smaller.end()));
    }
  }
}

TEST_CASE("FormIndex answers multiple queries from one search") {
  const Grammar g = g_ab();
  const FormIndex index(g, {Symbol::nt(g.start)}, {4, 8});
  CHECK(index.steps_of(parse_form("'a' 'b'")) == 2);
  CHECK(index.steps_of(parse_form("S")) == 0);
  CHECK_FALSE(index.steps_of(parse_form("'b'")).has_value());
  const auto d = index.derivation_of(parse_form("'a' 'a' 'b' 'b'"));
  REQUIRE(d.has_value());
  CHECK(d->step_count() == 3);
}
