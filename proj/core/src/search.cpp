#include "cfga/search.hpp"

#include <algorithm>
#include <deque>

#include "cfga/errors.hpp"

namespace cfga {

namespace {

// Rule ids grouped by lhs text, ids ascending within a group.
std::unordered_map<std::string, std::vector<std::size_t>> rules_by_lhs(
    const Grammar& g) {
  std::unordered_map<std::string, std::vector<std::size_t>> map;
  for (const Rule& r : g.rules) {
    map[r.lhs.text()].push_back(r.id);
  }
  return map;
}

}  // namespace

FormIndex::FormIndex(const Grammar& g, SententialForm from,
                     const SearchBounds& bounds)
    : FormIndex(g, std::move(from), bounds, nullptr) {}

FormIndex::FormIndex(const Grammar& g, SententialForm from,
                     const SearchBounds& bounds, const std::string* stop_text)
    : from_(std::move(from)) {
  if (from_.size() > bounds.max_len) {
    throw InvalidInput("start form longer than max_len");
  }

  const auto by_lhs = rules_by_lhs(g);

  std::string root_text = form_text(from_);
  const bool stop_at_root = stop_text != nullptr && *stop_text == root_text;
  nodes_.push_back(Node{from_, 0, 0, Step{0, 0}});
  by_text_.emplace(std::move(root_text), 0);

  std::deque<std::size_t> queue{0};
  SententialForm next;
  while (!queue.empty() && !stop_at_root) {
    const std::size_t at = queue.front();
    queue.pop_front();
    const std::size_t depth = nodes_[at].depth;
    if (depth >= bounds.max_steps) continue;
    // nodes_[at].form must be re-read after any push_back (reallocation).
    for (std::size_t pos = 0; pos < nodes_[at].form.size(); ++pos) {
      const Symbol& sym = nodes_[at].form[pos];
      if (!sym.is_nonterminal()) continue;
      const auto it = by_lhs.find(sym.nt_name().text());
      if (it == by_lhs.end()) continue;
      for (const std::size_t rule_id : it->second) {
        if (detail::try_apply_rule(g, nodes_[at].form, pos, rule_id, &next)) {
          continue;
        }
        std::string key = form_text(next);
        if (by_text_.contains(key)) continue;
        if (nodes_.size() + 1 > bounds.form_cap) {
          throw BudgetExceeded(nodes_.size() + 1, bounds.form_cap);
        }
        const bool found_target = stop_text != nullptr && key == *stop_text;
        by_text_.emplace(std::move(key), nodes_.size());
        nodes_.push_back(Node{next, depth + 1, at, Step{pos, rule_id}});
        if (found_target) {
          queue.clear();
          goto done;
        }
        queue.push_back(nodes_.size() - 1);
      }
    }
  }
done:

  forms_.reserve(nodes_.size());
  for (const Node& n : nodes_) {
    if (n.form.size() <= bounds.max_len) {
      forms_.push_back(RankedForm{n.form, n.depth});
    }
  }
  std::sort(forms_.begin(), forms_.end(),
            [](const RankedForm& a, const RankedForm& b) {
              return shortlex_less(form_text(a.form), form_text(b.form));
            });
}

std::optional<std::size_t> FormIndex::steps_of(
    const SententialForm& target) const {
  const auto it = by_text_.find(form_text(target));
  if (it == by_text_.end()) return std::nullopt;
  return nodes_[it->second].depth;
}

std::optional<Derivation> FormIndex::derivation_of(
    const SententialForm& target) const {
  const auto it = by_text_.find(form_text(target));
  if (it == by_text_.end()) return std::nullopt;
  std::vector<Step> steps;
  for (std::size_t at = it->second; nodes_[at].depth > 0; at = nodes_[at].parent) {
    steps.push_back(nodes_[at].via);
  }
  std::reverse(steps.begin(), steps.end());
  return Derivation{from_, std::move(steps)};
}

std::optional<Derivation> derive_search(const Grammar& g,
                                        const SententialForm& from,
                                        const SententialForm& to,
                                        const SearchBounds& bounds) {
  if (bounds.max_len < from.size() || bounds.max_len < to.size()) {
    throw InvalidInput("max_len must be >= the length of both endpoint forms");
  }
  const std::string target = form_text(to);
  FormIndex index(g, from, bounds, &target);
  return index.derivation_of(to);
}

std::vector<RankedForm> enumerate_forms(const Grammar& g,
                                        const SearchBounds& bounds) {
  if (bounds.max_len < 1) {
    throw InvalidInput("max_len must be >= 1");
  }
  FormIndex index(g, SententialForm{Symbol::nt(g.start)}, bounds);
  return index.forms();
}

std::optional<Derivation> generates(const Grammar& g, const SententialForm& s,
                                    const SearchBounds& bounds) {
  return derive_search(g, SententialForm{Symbol::nt(g.start)}, s, bounds);
}

std::vector<SententialForm> sentences(const Grammar& g,
                                      const SearchBounds& bounds) {
  std::vector<SententialForm> out;
  for (const RankedForm& rf : enumerate_forms(g, bounds)) {
    const bool terminal_only =
        std::none_of(rf.form.begin(), rf.form.end(),
                     [](const Symbol& s) { return s.is_nonterminal(); });
    if (terminal_only) out.push_back(rf.form);
  }
  return out;
}

}  // namespace cfga
