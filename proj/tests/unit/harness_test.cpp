#include <doctest.h>

#include <set>

#include "cfga/errors.hpp"
#include "cfga/harness.hpp"
#include "cfga/search.hpp"
#include "cfga/text.hpp"
#include "test_support.hpp"

using namespace cfga;
using cfga::test::g_a;
using cfga::test::g_ab;
using cfga::test::g_b;
using cfga::test::g_eps;

namespace {

std::vector<CorpusEntry> small_corpus() {
  return {{"G_a", g_a()}, {"G_b", g_b()}, {"G_ab", g_ab()}};
}

}  // namespace

TEST_CASE("random grammars are deterministic in the seed") {
  GenParams p;
  p.seed = 1;
  const Grammar g1 = random_grammar(p);
  const Grammar g2 = random_grammar(p);
  CHECK(serialize_grammar(g1) == serialize_grammar(g2));

  p.seed = 2;
  CHECK(serialize_grammar(random_grammar(p)) != serialize_grammar(g1));
}

TEST_CASE("random grammars respect their size fields and validate") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenParams p;
    p.max_nonterminals = 4;
    p.max_terminals = 2;
    p.max_rules = 7;
    p.max_rhs_len = 3;
    p.seed = seed;
    const Grammar g = random_grammar(p);
    CHECK(validate_grammar(g).ok());
    CHECK(g.nonterminals.size() <= 4);
    CHECK(g.terminals.size() <= 2);
    CHECK(g.rules.size() <= 7);
    for (const Rule& r : g.rules) {
      CHECK(r.rhs.size() <= 3);
    }
    // Every nonterminal has at least one rule.
    for (const NtName& nt : g.nonterminals) {
      bool covered = false;
      for (const Rule& r : g.rules) covered = covered || r.lhs == nt;
      CHECK(covered);
    }
  }
}

TEST_CASE("a 1x1 generator yields a single-rule grammar") {
  GenParams p;
  p.max_nonterminals = 1;
  p.max_rules = 1;
  p.seed = 5;
  const Grammar g = random_grammar(p);
  CHECK(g.nonterminals.size() == 1);
  CHECK(g.rules.size() == 1);
}

TEST_CASE("generator parameters are checked") {
  GenParams p;
  p.max_rules = 0;
  CHECK_THROWS_AS(random_grammar(p), InvalidInput);
  p = GenParams{};
  p.epsilon_rule_probability = 1.5;
  CHECK_THROWS_AS(random_grammar(p), InvalidInput);
}

TEST_CASE("theorem names round-trip") {
  for (const TheoremId id : kAllTheorems) {
    CHECK(theorem_from_name(theorem_name(id)) == id);
  }
  CHECK_FALSE(theorem_from_name("nope").has_value());
}

TEST_CASE("cat_correct passes on (G_a, G_b)") {
  CheckBounds b;
  b.max_steps = 4;
  const TheoremReport r =
      check_theorem(TheoremId::CatCorrect, {{"G_a", g_a()}, {"G_b", g_b()}}, b);
  CHECK(r.outcome == TheoremReport::Outcome::Pass);
  CHECK(r.cases_checked > 0);
  CHECK(r.line().find("cat_correct (G_a,G_b)") == 0);
  CHECK(r.line().find("PASS(") != std::string::npos);
}

TEST_CASE("clo_correct_inv passes on G_ab at (6,6)") {
  CheckBounds b;
  b.max_steps = 6;
  b.max_len = 6;
  const TheoremReport r =
      check_theorem(TheoremId::CloCorrectInv, {{"G_ab", g_ab()}}, b);
  CHECK(r.outcome == TheoremReport::Outcome::Pass);
}

TEST_CASE("every theorem passes on the small corpus pairs") {
  CheckBounds b;
  b.max_steps = 4;
  for (const TheoremId id : kAllTheorems) {
    for (const auto& e1 : small_corpus()) {
      if (theorem_is_binary(id)) {
        for (const auto& e2 : small_corpus()) {
          const TheoremReport r = check_theorem(id, {e1, e2}, b);
          CAPTURE(r.line());
          CHECK(r.outcome == TheoremReport::Outcome::Pass);
        }
      } else {
        const TheoremReport r = check_theorem(id, {e1}, b);
        CAPTURE(r.line());
        CHECK(r.outcome == TheoremReport::Outcome::Pass);
      }
    }
  }
}

TEST_CASE("the empty form is accepted from whichever side generates it") {
  // G_a does not generate the empty form but G_eps does; the classifier
  // prefers FromFirst for []. The check must follow the theorem's
  // disjunction instead of failing on the tie-break.
  CheckBounds b;
  b.max_steps = 4;
  for (auto inputs : {std::vector<CorpusEntry>{{"G_a", g_a()}, {"G_eps", g_eps()}},
                      std::vector<CorpusEntry>{{"G_eps", g_eps()}, {"G_a", g_a()}}}) {
    const TheoremReport r = check_theorem(TheoremId::UniCorrectInv, inputs, b);
    CAPTURE(r.line());
    CHECK(r.outcome == TheoremReport::Outcome::Pass);
  }
}

TEST_CASE("arity mismatches are rejected") {
  CHECK_THROWS_AS(check_theorem(TheoremId::UniCorrect, {{"G_a", g_a()}}, {}),
                  InvalidInput);
  CHECK_THROWS_AS(check_theorem(TheoremId::CloCorrect,
                                {{"G_a", g_a()}, {"G_b", g_b()}}, {}),
                  InvalidInput);
}

TEST_CASE("each construction mutant is caught by its inverse check") {
  CheckBounds b;
  b.max_steps = 5;

  const TheoremReport uni = check_mutant(
      MutantKind::UnionMixedSides, {{"G_a", g_a()}, {"G_b", g_b()}}, b);
  CHECK(uni.outcome == TheoremReport::Outcome::Fail);
  CHECK(uni.id == TheoremId::UniCorrectInv);
  CHECK(uni.inputs == "(G_a,G_b)[mutant:union-mixed-sides]");

  const TheoremReport cat = check_mutant(
      MutantKind::CatSwappedSides, {{"G_a", g_a()}, {"G_b", g_b()}}, b);
  CHECK(cat.outcome == TheoremReport::Outcome::Fail);
  CHECK(cat.id == TheoremId::CatCorrectInv);

  const TheoremReport clo =
      check_mutant(MutantKind::CloTrailingStart, {{"G_ab", g_ab()}}, b);
  CHECK(clo.outcome == TheoremReport::Outcome::Fail);
  CHECK(clo.id == TheoremId::CloCorrectInv);
}

TEST_CASE("mutant constructions stay valid grammars") {
  for (const MutantKind kind :
       {MutantKind::UnionMixedSides, MutantKind::CatSwappedSides}) {
    const Grammar m =
        mutant_construction(kind, {{"G_a", g_a()}, {"G_b", g_b()}});
    CHECK(validate_grammar(m).ok());
  }
  CHECK(validate_grammar(
            mutant_construction(MutantKind::CloTrailingStart, {{"G_ab", g_ab()}}))
            .ok());
}

TEST_CASE("failed reports replay to the same failure") {
  CheckBounds b;
  b.max_steps = 5;
  const TheoremReport failed = check_mutant(
      MutantKind::CatSwappedSides, {{"G_a", g_a()}, {"G_ab", g_ab()}}, b);
  REQUIRE(failed.outcome == TheoremReport::Outcome::Fail);
  REQUIRE(failed.counterexample.has_value());

  const TheoremReport again = replay_counterexample(failed, b);
  CHECK(again.outcome == TheoremReport::Outcome::Fail);
  CHECK(again.detail == failed.detail);

  const TheoremReport ok =
      check_theorem(TheoremId::UniCorrect, {{"G_a", g_a()}, {"G_b", g_b()}}, b);
  CHECK_THROWS_AS(replay_counterexample(ok, b), InvalidInput);
}

TEST_CASE("run_suite covers all ids over ordered pairs and passes") {
  SuiteConfig config;
  config.corpus = small_corpus();
  config.bounds.max_steps = 6;
  config.bounds.max_len = 6;
  const SuiteSummary summary = run_suite(config);
  // 4 binary ids x 9 ordered pairs + 4 unary ids x 3 grammars.
  CHECK(summary.reports.size() == 48);
  CHECK(summary.all_passed());

  std::set<TheoremId> ids;
  for (const auto& r : summary.reports) ids.insert(r.id);
  CHECK(ids.size() == 8);

  // Determinism: byte-identical summaries for identical configs.
  CHECK(run_suite(config).text() == summary.text());
}

TEST_CASE("an empty corpus yields an empty passing summary") {
  const SuiteSummary summary = run_suite(SuiteConfig{});
  CHECK(summary.reports.empty());
  CHECK(summary.all_passed());
  CHECK(summary.text() == "suite: 0 reports, 0 pass, 0 fail, 0 inconclusive\n");
}

TEST_CASE("budget exhaustion is inconclusive, not a failure") {
  CheckBounds tiny;
  tiny.max_steps = 8;
  tiny.max_len = 10;
  tiny.form_cap = 3;
  const TheoremReport capped =
      check_theorem(TheoremId::UniCorrect, {{"G_ab", g_ab()}, {"G_ab", g_ab()}},
                    tiny);
  CHECK(capped.outcome == TheoremReport::Outcome::Inconclusive);
  CHECK(capped.detail.find("budget") != std::string::npos);

  CheckBounds few;
  few.max_steps = 4;
  few.max_cases = 2;
  const TheoremReport cases =
      check_theorem(TheoremId::CloCorrect, {{"G_ab", g_ab()}}, few);
  CHECK(cases.outcome == TheoremReport::Outcome::Inconclusive);
  CHECK(cases.detail.find("case budget") != std::string::npos);
}

TEST_CASE("the suite passes over a corpus of constructed grammars") {
  // Constructions over constructed grammars: wrappers nest, the outer
  // classification strips exactly one layer, and the inner fresh starts
  // travel through as ordinary lifted symbols.
  SuiteConfig config;
  config.corpus = {
      {"uni_ab", union_grammar(g_a(), g_b())},
      {"star_ab", kleene_grammar(g_ab())},
      {"star_star_a", kleene_grammar(kleene_grammar(g_a()))},
  };
  config.bounds.max_steps = 4;
  config.bounds.max_len = 8;
  config.bounds.max_segments = 2;
  const SuiteSummary summary = run_suite(config);
  for (const auto& r : summary.reports) {
    CAPTURE(r.line());
    CHECK(r.outcome == TheoremReport::Outcome::Pass);
  }
  CHECK(summary.all_passed());
}

TEST_CASE("random corpora run the full suite deterministically") {
  SuiteConfig config;
  config.corpus = random_corpus(2, 11);
  config.bounds.max_steps = 3;
  config.bounds.max_len = 6;
  config.bounds.max_segments = 2;
  const SuiteSummary s1 = run_suite(config);
  const SuiteSummary s2 = run_suite(config);
  CHECK(s1.text() == s2.text());
  CHECK(s1.reports.size() == 4 * 4 + 4 * 2);
  for (const auto& r : s1.reports) {
    CAPTURE(r.line());
    CHECK(r.outcome != TheoremReport::Outcome::Fail);
  }
  CHECK(s1.reports[0].inputs.find("mt19937_64") != std::string::npos);
}
