#include <doctest.h>

#include <random>

#include "cfga/derivation.hpp"
#include "cfga/errors.hpp"
#include "cfga/text.hpp"
#include "test_support.hpp"

using namespace cfga;
using cfga::test::fixed_corpus;
using cfga::test::g_ab;
using cfga::test::random_walk;

TEST_CASE("two forced substitutions are accepted") {
  const Grammar g = g_ab();
  const Derivation d{parse_form("S"), {{0, 0}, {1, 1}}};
  const CheckResult r = check_derivation(g, d);
  REQUIRE(r.accepted);
  CHECK(form_text(r.final_form) == "'a' 'b'");
}

TEST_CASE("empty steps are reflexively accepted") {
  const Grammar g = g_ab();
  const Derivation d{parse_form("'a' 'b'"), {}};
  const CheckResult r = check_derivation(g, d);
  REQUIRE(r.accepted);
  CHECK(r.final_form == d.start);
}

TEST_CASE("a step into an empty form is rejected at its index") {
  const Grammar g = g_ab();
  const Derivation d{parse_form("S"), {{0, 1}, {0, 0}}};
  const CheckResult r = check_derivation(g, d);
  REQUIRE_FALSE(r.accepted);
  CHECK(r.failed_step == 1);
  CHECK(r.reason == "position out of range");
}

TEST_CASE("rejection reasons distinguish bad rules and mismatches") {
  const Grammar g = g_ab();
  CHECK(check_derivation(g, {parse_form("S"), {{0, 5}}}).reason ==
        "rule id out of range");
  CHECK(check_derivation(g, {parse_form("'a'"), {{0, 0}}}).reason ==
        "symbol mismatch");
}

TEST_CASE("compose joins certificates end to end") {
  const Grammar g = g_ab();
  const Derivation d1{parse_form("S"), {{0, 0}}};        // S => a S b
  const Derivation d2{parse_form("'a' S 'b'"), {{1, 1}}};  // a S b => a b
  const Derivation joined = compose_derivations(g, d1, d2);
  CHECK(joined.step_count() == 2);
  const CheckResult r = check_derivation(g, joined);
  REQUIRE(r.accepted);
  CHECK(form_text(r.final_form) == "'a' 'b'");
}

TEST_CASE("composing with an empty first derivation is the identity") {
  const Grammar g = g_ab();
  const Derivation d1{parse_form("S"), {}};
  const Derivation d2{parse_form("S"), {{0, 0}, {1, 1}}};
  const Derivation joined = compose_derivations(g, d1, d2);
  CHECK(joined.start == d2.start);
  CHECK(joined.steps == d2.steps);
}

TEST_CASE("compose rejects mismatched forms and bad certificates") {
  const Grammar g = g_ab();
  const Derivation d1{parse_form("S"), {{0, 0}, {1, 1}}};  // ends at a b
  const Derivation d2{parse_form("S"), {{0, 1}}};
  CHECK_THROWS_AS(compose_derivations(g, d1, d2), FormMismatch);
  const Derivation bad{parse_form("S"), {{4, 0}}};
  CHECK_THROWS_AS(compose_derivations(g, bad, d2), InvalidInput);
  CHECK_THROWS_AS(compose_derivations(g, d1, bad), InvalidInput);
}

TEST_CASE("embedding shifts positions by the left context") {
  const Grammar g = g_ab();
  const Derivation d{parse_form("S"), {{0, 0}, {1, 1}}};  // S =>* a b
  const Derivation e =
      embed_derivation(g, d, parse_form("'a'"), parse_form("'b'"));
  CHECK(e.start == parse_form("'a' S 'b'"));
  CHECK(e.step_count() == 2);
  CHECK(e.steps[0] == Step{1, 0});
  CHECK(e.steps[1] == Step{2, 1});
  const CheckResult r = check_derivation(g, e);
  REQUIRE(r.accepted);
  CHECK(form_text(r.final_form) == "'a' 'a' 'b' 'b'");
}

TEST_CASE("embedding with empty contexts is the identity") {
  const Grammar g = g_ab();
  const Derivation d{parse_form("S"), {{0, 0}}};
  const Derivation e = embed_derivation(g, d, {}, {});
  CHECK(e.start == d.start);
  CHECK(e.steps == d.steps);
}

TEST_CASE("embedding after a nontrivial left context re-checks") {
  const Grammar g = g_ab();
  const Derivation d{parse_form("S"), {{0, 0}}};  // S => a S b
  const Derivation e = embed_derivation(g, d, parse_form("'a' S 'b'"), {});
  CHECK(e.start == parse_form("'a' S 'b' S"));
  REQUIRE(e.step_count() == 1);
  CHECK(e.steps[0] == Step{3, 0});
  const CheckResult r = check_derivation(g, e);
  REQUIRE(r.accepted);
  CHECK(form_text(r.final_form) == "'a' S 'b' 'a' S 'b'");
}

TEST_CASE("embedding a rejected certificate is an error") {
  const Grammar g = g_ab();
  const Derivation bad{parse_form("S"), {{2, 0}}};
  CHECK_THROWS_AS(embed_derivation(g, bad, {}, {}), InvalidInput);
}

TEST_CASE("derivation invariants hold on random walks") {
  std::mt19937_64 rng(20240131);
  for (const auto& [name, g] : fixed_corpus()) {
    CAPTURE(name);
    for (int i = 0; i < 60; ++i) {
      const Derivation d1 =
          random_walk(g, {Symbol::nt(g.start)}, 1 + rng() % 4, rng);
      const CheckResult r1 = check_derivation(g, d1);
      REQUIRE(r1.accepted);

      // Reflexivity on every intermediate start.
      const CheckResult refl = check_derivation(g, {d1.start, {}});
      CHECK(refl.accepted);
      CHECK(refl.final_form == d1.start);

      // Checker/step agreement: a manual replay reproduces the final form.
      SententialForm manual = d1.start;
      for (const Step& s : d1.steps) {
        manual = apply_rule_at(g, manual, s.pos, s.rule);
      }
      CHECK(manual == r1.final_form);

      // Transitivity with exact step addition.
      const Derivation d2 = random_walk(g, r1.final_form, rng() % 4, rng);
      const Derivation joined = compose_derivations(g, d1, d2);
      const CheckResult rj = check_derivation(g, joined);
      REQUIRE(rj.accepted);
      CHECK(joined.step_count() == d1.step_count() + d2.step_count());
      CHECK(rj.final_form == check_derivation(g, d2).final_form);

      // Context embedding preserves step counts and wraps the final form.
      const SententialForm left =
          check_derivation(g, random_walk(g, {Symbol::nt(g.start)}, rng() % 3, rng))
              .final_form;
      const SententialForm right =
          check_derivation(g, random_walk(g, {Symbol::nt(g.start)}, rng() % 3, rng))
              .final_form;
      const Derivation e = embed_derivation(g, d1, left, right);
      const CheckResult re = check_derivation(g, e);
      REQUIRE(re.accepted);
      CHECK(e.step_count() == d1.step_count());
      CHECK(re.final_form ==
            concat_forms(concat_forms(left, r1.final_form), right));
    }
  }
}
