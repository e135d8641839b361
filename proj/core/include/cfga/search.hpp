#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cfga/derivation.hpp"
#include "cfga/grammar.hpp"
#include "cfga/symbols.hpp"

namespace cfga {

/// Bounds for the breadth-first derivation search.
///
/// max_steps bounds derivation length; max_len bounds the *reported/target*
/// forms (ε-rules make step-bounded search non-monotone in form length, so
/// forms longer than any result can still be necessary intermediates and are
/// explored); form_cap caps the number of distinct explored forms — exceeding
/// it raises BudgetExceeded, which is distinct from an exhaustive "absent".
struct SearchBounds {
  std::size_t max_steps = 8;
  std::size_t max_len = 12;
  std::size_t form_cap = 1'000'000;
};

/// A reachable sentential form paired with its minimal step count.
struct RankedForm {
  SententialForm form;
  std::size_t steps;
};

/// Breadth-first closure of one start form under rule application, explored
/// once and then queried. Expansion order is position-ascending then
/// rule-ascending with first-visit-wins deduplication, so the index — and
/// every derivation it reconstructs — is deterministic, with minimal step
/// counts per form.
class FormIndex {
 public:
  /// Runs the full bounded search eagerly. Throws BudgetExceeded when the
  /// explored-form count would pass bounds.form_cap, InvalidInput when
  /// |from| > bounds.max_len.
  FormIndex(const Grammar& g, SententialForm from, const SearchBounds& bounds);

  /// All reachable forms of length <= max_len with minimal step counts,
  /// sorted shortlex over the serialized form.
  const std::vector<RankedForm>& forms() const { return forms_; }

  /// Minimal steps to reach `target`, if reached (any length).
  std::optional<std::size_t> steps_of(const SententialForm& target) const;

  /// Minimal derivation from the index's start form to `target`, if reached.
  std::optional<Derivation> derivation_of(const SententialForm& target) const;

  const SententialForm& from() const { return from_; }
  std::size_t explored() const { return nodes_.size(); }

 private:
  struct Node {
    SententialForm form;
    std::size_t depth;
    std::size_t parent;  // index into nodes_; self for the root
    Step via;            // step applied at the parent; unused for the root
  };

  // Early-exit variant: stops as soon as the form serialized as *stop_text
  // is first reached (breadth-first order makes that reach minimal).
  FormIndex(const Grammar& g, SententialForm from, const SearchBounds& bounds,
            const std::string* stop_text);

  friend std::optional<Derivation> derive_search(const Grammar&,
                                                 const SententialForm&,
                                                 const SententialForm&,
                                                 const SearchBounds&);

  SententialForm from_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> by_text_;
  std::vector<RankedForm> forms_;
};

/// Minimal-step derivation from `from` to `to` within the bounds, or absent
/// when exhaustively refuted. Requires max_len >= max(|from|, |to|) (throws
/// InvalidInput) and may throw BudgetExceeded.
std::optional<Derivation> derive_search(const Grammar& g,
                                        const SententialForm& from,
                                        const SententialForm& to,
                                        const SearchBounds& bounds);

/// All forms reachable from [start] within the bounds, each with its minimal
/// step count, sorted shortlex. Requires max_len >= 1.
std::vector<RankedForm> enumerate_forms(const Grammar& g,
                                        const SearchBounds& bounds);

/// derive_search from the singleton start form.
std::optional<Derivation> generates(const Grammar& g, const SententialForm& s,
                                    const SearchBounds& bounds);

/// The terminal-only subset of enumerate_forms, sorted shortlex.
std::vector<SententialForm> sentences(const Grammar& g,
                                      const SearchBounds& bounds);

}  // namespace cfga
