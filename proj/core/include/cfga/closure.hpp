#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cfga/derivation.hpp"
#include "cfga/grammar.hpp"
#include "cfga/search.hpp"
#include "cfga/symbols.hpp"

namespace cfga {

/// Selects one of the symbol-wrapping maps: which construction and, for the
/// binary ones, which operand. Kleene closure only has a First side.
struct LiftSpec {
  OpTag op;
  SideTag side;

  static LiftSpec union_first() { return {OpTag::Union, SideTag::First}; }
  static LiftSpec union_second() { return {OpTag::Union, SideTag::Second}; }
  static LiftSpec cat_first() { return {OpTag::Cat, SideTag::First}; }
  static LiftSpec cat_second() { return {OpTag::Cat, SideTag::Second}; }
  static LiftSpec clo() { return {OpTag::Clo, SideTag::First}; }
};

/// Wraps one symbol for the constructed grammar: nonterminals gain a Lifted
/// wrapper; terminals gain a Side wrapper for union/concatenation and pass
/// through unchanged for closure.
Symbol lift_symbol(const LiftSpec& spec, const Symbol& sym);

/// Element-wise lift. Length-preserving and injective for a fixed spec.
SententialForm lift_form(const LiftSpec& spec, const SententialForm& form);

/// Inverse of lift_form on exactly the uniformly tagged forms: strips one
/// wrapper layer from every symbol, or nullopt if any symbol does not carry
/// the spec's wrapper. For Clo, terminals pass through unchanged.
std::optional<SententialForm> try_unlift_form(const LiftSpec& spec,
                                              const SententialForm& form);

/// Replays a source-grammar derivation inside a constructed grammar: the
/// start and every intermediate form are lifted, positions are unchanged,
/// rule ids shift by the construction's rule-id offset.
Derivation lift_derivation(const LiftSpec& spec, const Derivation& d,
                           std::size_t rule_id_offset);

/// Union grammar: fresh start @uni with the two start rules, then g1's and
/// g2's rules lifted onto disjoint side-tagged alphabets. Rule ids: start
/// rules 0 and 1, then g1's rules in source order, then g2's. Rule count is
/// |P1| + |P2| + 2. Throws InvalidInput when a source grammar is invalid.
Grammar union_grammar(const Grammar& g1, const Grammar& g2);

/// Concatenation grammar: fresh start @cat with the single two-symbol start
/// rule, then the lifted rules. Rule ids: start rule 0, then g1's, then
/// g2's. Rule count is |P1| + |P2| + 1.
Grammar concat_grammar(const Grammar& g1, const Grammar& g2);

/// Kleene closure grammar: fresh start @clo with the grow rule
/// @clo -> @clo <1:clo:start> and the erase rule @clo -> ε, then the lifted
/// rules; terminals are unchanged. Rule ids: grow 0, erase 1, then g's
/// rules. Rule count is |P| + 2.
Grammar kleene_grammar(const Grammar& g);

/// Rule-id offsets of the lifted source rules inside each construction.
std::size_t union_rule_offset(SideTag side, const Grammar& g1);
std::size_t cat_rule_offset(SideTag side, const Grammar& g1);
constexpr std::size_t kKleeneRuleOffset = 2;

/// Converts a source derivation [start_i] =>* s into a union-grammar
/// derivation [@uni] =>* lift(side, s): the matching start rule followed by
/// the lifted replay. Step count grows by exactly one. Throws InvalidInput
/// when d is rejected or does not start at the side's start symbol.
Derivation union_witness(const Grammar& g1, const Grammar& g2, SideTag side,
                         const Derivation& d);

/// Converts derivations [start_1] =>* s1 and [start_2] =>* s2 into a
/// concatenation-grammar derivation [@cat] =>* lift1(s1) ++ lift2(s2):
/// the start rule, then the lifted first derivation embedded with the
/// pending second start on its right, then the lifted second derivation
/// embedded after the finished first part. Step count is
/// steps(d1) + steps(d2) + 1.
Derivation cat_witness(const Grammar& g1, const Grammar& g2,
                       const Derivation& d1, const Derivation& d2);

/// Converts source derivations [start] =>* s_i into a closure-grammar
/// derivation [@clo] =>* lift(s_1) ++ ... ++ lift(s_n), iterating the grow
/// rule around the previously built prefix and closing the base case with
/// the erase rule. Step count is sum(steps(d_i)) + n + 1.
Derivation clo_witness(const Grammar& g, const std::vector<Derivation>& ds);

/// Syntactic classification of a union-grammar form. The empty form is the
/// lift of the empty form from either side; classification deterministically
/// prefers FromFirst (callers verifying generation must consider both sides
/// for the empty form).
struct UnionClassification {
  enum class Kind { StartForm, FromFirst, FromSecond, NotLifted };

  Kind kind;
  SententialForm unlifted;  // FromFirst / FromSecond only
};

UnionClassification union_classify(const Grammar& g1, const Grammar& g2,
                                   const SententialForm& s);

/// A concatenation-grammar form split at the unique First/Second boundary,
/// with bounded-search witnesses that the sources generate the two halves.
struct CatDecomposition {
  SententialForm first;
  SententialForm second;
  Derivation first_witness;
  Derivation second_witness;
};

/// A closure-grammar form: empty, the bare start form, or a split
/// prefix ++ lift(tail) where the closure grammar generates the prefix and
/// the source grammar generates the tail.
struct CloDecomposition {
  enum class Kind { EmptyForm, StartForm, Split };

  Kind kind;
  SententialForm prefix;      // Split only: a closure-grammar form
  SententialForm tail;        // Split only: a source-grammar form
  Derivation prefix_witness;  // over kleene_grammar(g)
  Derivation tail_witness;    // over g
};

/// Reusable decomposer for concatenation-grammar forms: builds the two
/// bounded generation oracles once, then answers any number of queries.
/// The constructor may throw BudgetExceeded (propagated from the oracle).
class CatDecomposer {
 public:
  CatDecomposer(const Grammar& g1, const Grammar& g2,
                const SearchBounds& bounds);

  /// The unique split of s into a First-tagged prefix and a Second-tagged
  /// suffix, unlifted and witnessed; the bare start form [@cat] maps to
  /// ([start1], [start2]) with reflexive witnesses. Absent when no uniform
  /// split exists or a witness search refutes within bounds.
  std::optional<CatDecomposition> decompose(const SententialForm& s) const;

 private:
  Grammar g1_;
  Grammar g2_;
  SearchBounds bounds_;
  SententialForm cat_start_form_;
  std::unique_ptr<FormIndex> first_oracle_;
  std::unique_ptr<FormIndex> second_oracle_;
};

/// Reusable decomposer for closure-grammar forms. Searches splits
/// s = prefix ++ lift(tail) longest tail first and returns the first split
/// both oracles verify.
class CloDecomposer {
 public:
  CloDecomposer(const Grammar& g, const SearchBounds& bounds);

  std::optional<CloDecomposition> decompose(const SententialForm& s) const;

 private:
  Grammar g_;
  Grammar clo_;
  SearchBounds bounds_;
  std::unique_ptr<FormIndex> clo_oracle_;
  std::unique_ptr<FormIndex> source_oracle_;
};

/// One-shot conveniences over the decomposer classes.
std::optional<CatDecomposition> cat_decompose(const Grammar& g1,
                                              const Grammar& g2,
                                              const SententialForm& s,
                                              const SearchBounds& bounds);
std::optional<CloDecomposition> clo_decompose(const Grammar& g,
                                              const SententialForm& s,
                                              const SearchBounds& bounds);

}  // namespace cfga
