#include <doctest.h>

#include "cfga/errors.hpp"
#include "cfga/grammar.hpp"
#include "cfga/text.hpp"
#include "test_support.hpp"

using namespace cfga;
using cfga::test::g_ab;

namespace {

NtName nt(const char* name) { return NtName::plain(name); }
TName t(const char* name) { return TName::plain(name); }

}  // namespace

TEST_CASE("G_ab passes validation") {
  const ValidationReport report = validate_grammar(g_ab());
  CHECK(report.ok());
  CHECK(report.violations.empty());
}

TEST_CASE("undeclared start is reported") {
  Grammar g = g_ab();
  g.start = nt("X");
  const ValidationReport report = validate_grammar(g);
  CHECK_FALSE(report.ok());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0] == "start not declared: X");
}

TEST_CASE("duplicate rules are reported") {
  const Grammar g = make_grammar(nt("S"), {nt("S")}, {},
                                 {{nt("S"), {}}, {nt("S"), {}}});
  const ValidationReport report = validate_grammar(g);
  CHECK_FALSE(report.ok());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0] == "duplicate rule: S -> ");
}

TEST_CASE("undeclared rule symbols are reported") {
  const Grammar g = make_grammar(
      nt("S"), {nt("S")}, {t("a")},
      {{nt("X"), {}}, {nt("S"), {Symbol::t(t("z")), Symbol::nt(nt("S"))}}});
  const ValidationReport report = validate_grammar(g);
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0] == "rule lhs not declared: X -> ");
  CHECK(report.violations[1] == "rule rhs symbol not declared: 'z' in S -> 'z' S");
}

TEST_CASE("rule id mismatch is reported") {
  Grammar g = g_ab();
  g.rules[1].id = 7;
  const ValidationReport report = validate_grammar(g);
  CHECK_FALSE(report.ok());
  CHECK(report.violations[0] == "rule id mismatch at position 1: S -> ");
}

TEST_CASE("apply_rule_at substitutes at the position") {
  const Grammar g = g_ab();  // rule 0: S -> 'a' S 'b', rule 1: S ->
  const SententialForm s = parse_form("S");

  const SententialForm grown = apply_rule_at(g, s, 0, 0);
  CHECK(form_text(grown) == "'a' S 'b'");

  const SententialForm erased = apply_rule_at(g, grown, 1, 1);
  CHECK(form_text(erased) == "'a' 'b'");
}

TEST_CASE("apply_rule_at error cases") {
  const Grammar g = g_ab();
  const SententialForm form = parse_form("'a' S 'b'");
  CHECK_THROWS_AS(apply_rule_at(g, form, 0, 0), SymbolMismatch);
  CHECK_THROWS_AS(apply_rule_at(g, form, 3, 0), PositionOutOfRange);
  CHECK_THROWS_AS(apply_rule_at(g, form, 1, 9), InvalidInput);
}

TEST_CASE("make_grammar sorts and dedups alphabets") {
  const Grammar g = make_grammar(nt("S"), {nt("Long"), nt("S"), nt("S")},
                                 {t("b"), t("a")}, {{nt("S"), {}}});
  REQUIRE(g.nonterminals.size() == 2);
  CHECK(g.nonterminals[0].text() == "S");
  CHECK(g.nonterminals[1].text() == "Long");
  REQUIRE(g.terminals.size() == 2);
  CHECK(g.terminals[0].text() == "'a'");
  CHECK(g.terminals[1].text() == "'b'");
  CHECK(g.rules[0].id == 0);
}
