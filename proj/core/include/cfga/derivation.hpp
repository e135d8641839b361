#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfga/grammar.hpp"
#include "cfga/symbols.hpp"

namespace cfga {

/// One rewriting step: apply rule `rule` at absolute position `pos` of the
/// current sentential form. The absolute position resolves the split around
/// the rewritten nonterminal deterministically; steps need not be leftmost.
struct Step {
  std::size_t pos;
  std::size_t rule;

  friend bool operator==(const Step& a, const Step& b) {
    return a.pos == b.pos && a.rule == b.rule;
  }
};

/// A checkable derivation certificate: a start form plus the steps that
/// rewrite it. An empty step list is valid for any form (reflexivity).
struct Derivation {
  SententialForm start;
  std::vector<Step> steps;

  std::size_t step_count() const { return steps.size(); }
};

/// Result of replaying a certificate. Rejection is a result, not a failure.
struct CheckResult {
  bool accepted;
  SententialForm final_form;   // meaningful when accepted
  std::size_t failed_step;     // meaningful when rejected
  std::string reason;          // meaningful when rejected

  static CheckResult accept(SententialForm final_form) {
    return CheckResult{true, std::move(final_form), 0, {}};
  }
  static CheckResult reject(std::size_t step, std::string reason) {
    return CheckResult{false, {}, step, std::move(reason)};
  }
};

/// Replays the certificate's steps from its start form. Accepted iff every
/// step applies; empty steps are always accepted with final form = start.
CheckResult check_derivation(const Grammar& g, const Derivation& d);

/// Joins two certificates end to end. Both must be accepted and d1's final
/// form must equal d2.start; the result derives d1.start to d2's final form
/// with exactly step_count(d1) + step_count(d2) steps. Throws InvalidInput
/// (a rejected certificate) or FormMismatch.
Derivation compose_derivations(const Grammar& g, const Derivation& d1,
                               const Derivation& d2);

/// Replays a certificate inside a surrounding context: the result starts at
/// left ++ d.start ++ right, every step position shifts by |left|, and the
/// final form is left ++ final(d) ++ right. Step count is preserved. Throws
/// InvalidInput when d is rejected.
Derivation embed_derivation(const Grammar& g, const Derivation& d,
                            const SententialForm& left,
                            const SententialForm& right);

}  // namespace cfga
