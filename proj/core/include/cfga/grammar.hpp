#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cfga/symbols.hpp"

namespace cfga {

/// One production. `id` is the rule's stable index inside its grammar: the
/// position in Grammar::rules. The left-hand side is a single nonterminal,
/// the right-hand side may be empty.
struct Rule {
  std::size_t id;
  NtName lhs;
  SententialForm rhs;
};

/// A context-free grammar with explicit finite alphabets and an ordered,
/// duplicate-free rule list. Alphabets are kept sorted by shortlex over the
/// serialized symbol text, which makes serialization canonical.
struct Grammar {
  std::vector<NtName> nonterminals;
  std::vector<TName> terminals;
  NtName start;
  std::vector<Rule> rules;

  bool has_nonterminal(const NtName& nt) const;
  bool has_terminal(const TName& t) const;
  /// True when the symbol belongs to nonterminals ∪ terminals.
  bool has_symbol(const Symbol& sym) const;
};

/// Builds a grammar from unordered parts: sorts and dedups the alphabets,
/// assigns rule ids in the given order. Does not validate; callers that need
/// the invariants checked run validate_grammar on the result.
Grammar make_grammar(NtName start, std::vector<NtName> nonterminals,
                     std::vector<TName> terminals,
                     std::vector<std::pair<NtName, SententialForm>> rules);

/// Outcome of validate_grammar. Violations are data, not failures.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks every grammar invariant: start is declared, every rule lhs is a
/// declared nonterminal, every rhs symbol is declared, the two alphabets
/// have no serialized-name collision, no two rules share (lhs, rhs), and
/// rule ids equal their positions.
ValidationReport validate_grammar(const Grammar& g);

/// Replaces the single symbol at `pos` with the rule's right-hand side.
/// Throws InvalidInput (bad rule id), PositionOutOfRange, or SymbolMismatch
/// (the addressed symbol is a terminal or a different nonterminal).
SententialForm apply_rule_at(const Grammar& g, const SententialForm& form,
                             std::size_t pos, std::size_t rule_id);

namespace detail {

/// Non-throwing core of apply_rule_at; returns a reason on failure, nullptr
/// on success with *out filled in.
const char* try_apply_rule(const Grammar& g, const SententialForm& form,
                           std::size_t pos, std::size_t rule_id,
                           SententialForm* out);

}  // namespace detail

}  // namespace cfga
