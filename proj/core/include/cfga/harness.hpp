#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfga/closure.hpp"
#include "cfga/grammar.hpp"
#include "cfga/symbols.hpp"

namespace cfga {

/// Parameters for the deterministic random-grammar generator (mt19937_64).
struct GenParams {
  std::size_t max_nonterminals = 3;
  std::size_t max_terminals = 3;
  std::size_t max_rules = 6;
  std::size_t max_rhs_len = 3;
  double epsilon_rule_probability = 0.25;
  std::uint64_t seed = 0;
};

/// Deterministic in the seed. The output always passes validate_grammar,
/// every nonterminal has at least one rule, and the size fields are
/// respected. Throws InvalidInput for zero counts or a probability outside
/// [0, 1].
Grammar random_grammar(const GenParams& p);

/// The six closure theorems and the two derivation lemmas, as executable
/// bounded checks.
enum class TheoremId {
  UniCorrect,
  UniCorrectInv,
  CatCorrect,
  CatCorrectInv,
  CloCorrect,
  CloCorrectInv,
  DerivesTrans,
  DerivesContextFreeAdd,
};

inline constexpr std::array<TheoremId, 8> kAllTheorems = {
    TheoremId::UniCorrect,    TheoremId::UniCorrectInv,
    TheoremId::CatCorrect,    TheoremId::CatCorrectInv,
    TheoremId::CloCorrect,    TheoremId::CloCorrectInv,
    TheoremId::DerivesTrans,  TheoremId::DerivesContextFreeAdd,
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);
/// Two grammars for the union/concatenation theorems, one for closure and
/// the lemmas.
bool theorem_is_binary(TheoremId id);

/// Bounds for one theorem check.
///
/// Direct-theorem checks enumerate source derivations up to max_steps and
/// verify witnesses at the mapped step count; inverse checks enumerate
/// constructed-grammar forms up to max_steps and give the source oracles
/// max_steps - 1, matching the step-arithmetic laws, so a bounded PASS is
/// exhaustive relative to the bounds. max_segments bounds closure witness
/// sequences; max_contexts bounds the context list of the embedding-lemma
/// check (the empty form plus the first shortlex-ordered enumerated forms);
/// max_cases aborts a check as INCONCLUSIVE instead of silently truncating.
struct CheckBounds {
  std::size_t max_steps = 4;
  std::size_t max_len = 10;
  std::size_t form_cap = 1'000'000;
  std::size_t max_segments = 3;
  std::size_t max_contexts = 12;
  std::size_t max_cases = 10'000'000;

  std::string text() const;
};

/// A named grammar in a verification corpus.
struct CorpusEntry {
  std::string name;
  Grammar grammar;
};

/// Everything needed to reproduce a failure: the input grammars, the
/// constructed grammar when the check ran against a supplied (mutated)
/// construction, the first failing form in shortlex order, and the reason.
struct Counterexample {
  std::vector<CorpusEntry> inputs;
  std::optional<Grammar> constructed;
  SententialForm form;
  std::string reason;
};

struct TheoremReport {
  enum class Outcome { Pass, Fail, Inconclusive };

  TheoremId id;
  std::string inputs;  // e.g. "(G_a,G_b)"
  std::string bounds;
  Outcome outcome;
  std::size_t cases_checked = 0;
  std::string detail;  // Fail / Inconclusive explanation
  std::optional<Counterexample> counterexample;

  /// `<theoremId> <inputs> <bounds> PASS(<n>)|FAIL(<detail>)|INCONCLUSIVE(<detail>)`
  std::string line() const;
};

/// Runs one theorem as a bounded exhaustive check. Outcomes are
/// deterministic in the inputs and bounds; budget exhaustion reports
/// Inconclusive, never an exception. Throws InvalidInput only for an arity
/// mismatch or an invalid input grammar.
TheoremReport check_theorem(TheoremId id,
                            const std::vector<CorpusEntry>& inputs,
                            const CheckBounds& bounds);

/// Re-runs the check embedded in a failed report; deterministic, so it
/// reproduces the failure. Throws InvalidInput when the report carries no
/// counterexample.
TheoremReport replay_counterexample(const TheoremReport& failed,
                                    const CheckBounds& bounds);

/// Built-in construction mutants, each caught by its inverse-theorem check:
/// a union rule mixing both sides, a concatenation start rule with the
/// sides swapped, and a closure grow rule that trails the start symbol.
enum class MutantKind { UnionMixedSides, CatSwappedSides, CloTrailingStart };

inline constexpr std::array<MutantKind, 3> kAllMutants = {
    MutantKind::UnionMixedSides,
    MutantKind::CatSwappedSides,
    MutantKind::CloTrailingStart,
};

std::string_view mutant_name(MutantKind kind);

/// The tampered construction itself (still a valid grammar).
Grammar mutant_construction(MutantKind kind,
                            const std::vector<CorpusEntry>& inputs);

/// Runs the matching inverse-theorem check against the mutant construction;
/// expected to Fail on any corpus that reaches the tampered rule.
TheoremReport check_mutant(MutantKind kind,
                           const std::vector<CorpusEntry>& inputs,
                           const CheckBounds& bounds);

struct SuiteConfig {
  std::vector<CorpusEntry> corpus;
  CheckBounds bounds;
  /// When set, runs the three construction-mutant sensitivity checks
  /// instead of the eight theorem checks; every report is expected to FAIL.
  bool mutants = false;
};

struct SuiteSummary {
  std::vector<TheoremReport> reports;

  bool all_passed() const;
  std::size_t failed() const;
  std::size_t inconclusive() const;
  /// One line per report plus a closing tally line.
  std::string text() const;
};

/// Runs every theorem over the corpus: binary theorems over all ordered
/// pairs (including a grammar with itself), unary ones over each grammar.
/// Reports are sorted by theorem id then inputs. An empty corpus yields an
/// empty (passing) summary.
SuiteSummary run_suite(const SuiteConfig& config);

/// Corpus entries for N generated grammars named
/// `random<i>[mt19937_64:seed=<seed+i>]`.
std::vector<CorpusEntry> random_corpus(std::size_t count,
                                       std::uint64_t seed,
                                       const GenParams& base = {});

}  // namespace cfga
