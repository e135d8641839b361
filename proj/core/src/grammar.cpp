#include "cfga/grammar.hpp"

#include <algorithm>
#include <unordered_set>

#include "cfga/errors.hpp"

namespace cfga {

namespace {

template <typename Name>
void sort_unique(std::vector<Name>& names) {
  std::sort(names.begin(), names.end(), [](const Name& a, const Name& b) {
    return shortlex_less(a.text(), b.text());
  });
  names.erase(std::unique(names.begin(), names.end()), names.end());
}

}  // namespace

bool Grammar::has_nonterminal(const NtName& nt) const {
  return std::find(nonterminals.begin(), nonterminals.end(), nt) !=
         nonterminals.end();
}

bool Grammar::has_terminal(const TName& t) const {
  return std::find(terminals.begin(), terminals.end(), t) != terminals.end();
}

bool Grammar::has_symbol(const Symbol& sym) const {
  return sym.is_nonterminal() ? has_nonterminal(sym.nt_name())
                              : has_terminal(sym.t_name());
}

Grammar make_grammar(NtName start, std::vector<NtName> nonterminals,
                     std::vector<TName> terminals,
                     std::vector<std::pair<NtName, SententialForm>> rules) {
  sort_unique(nonterminals);
  sort_unique(terminals);
  Grammar g{std::move(nonterminals), std::move(terminals), std::move(start), {}};
  g.rules.reserve(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) {
    g.rules.push_back(Rule{i, std::move(rules[i].first), std::move(rules[i].second)});
  }
  return g;
}

ValidationReport validate_grammar(const Grammar& g) {
  ValidationReport report;

  if (!g.has_nonterminal(g.start)) {
    report.violations.push_back("start not declared: " + g.start.text());
  }

  std::unordered_set<std::string> names;
  for (const auto& nt : g.nonterminals) {
    if (!names.insert(nt.text()).second) {
      report.violations.push_back("duplicate nonterminal: " + nt.text());
    }
  }
  for (const auto& t : g.terminals) {
    if (!names.insert(t.text()).second) {
      report.violations.push_back("alphabet name collision: " + t.text());
    }
  }

  std::unordered_set<std::string> bodies;
  for (std::size_t i = 0; i < g.rules.size(); ++i) {
    const Rule& r = g.rules[i];
    const std::string label = r.lhs.text() + " -> " + form_text(r.rhs);
    if (r.id != i) {
      report.violations.push_back("rule id mismatch at position " +
                                  std::to_string(i) + ": " + label);
    }
    if (!g.has_nonterminal(r.lhs)) {
      report.violations.push_back("rule lhs not declared: " + label);
    }
    for (const auto& sym : r.rhs) {
      if (!g.has_symbol(sym)) {
        report.violations.push_back("rule rhs symbol not declared: " +
                                    sym.text() + " in " + label);
      }
    }
    if (!bodies.insert(label).second) {
      report.violations.push_back("duplicate rule: " + label);
    }
  }

  return report;
}

namespace detail {

const char* try_apply_rule(const Grammar& g, const SententialForm& form,
                           std::size_t pos, std::size_t rule_id,
                           SententialForm* out) {
  if (rule_id >= g.rules.size()) return "rule id out of range";
  if (pos >= form.size()) return "position out of range";
  const Rule& rule = g.rules[rule_id];
  const Symbol& at = form[pos];
  if (!at.is_nonterminal() || at.nt_name() != rule.lhs) {
    return "symbol mismatch";
  }
  out->clear();
  out->reserve(form.size() + rule.rhs.size() - 1);
  out->insert(out->end(), form.begin(), form.begin() + static_cast<std::ptrdiff_t>(pos));
  out->insert(out->end(), rule.rhs.begin(), rule.rhs.end());
  out->insert(out->end(), form.begin() + static_cast<std::ptrdiff_t>(pos) + 1, form.end());
  return nullptr;
}

}  // namespace detail

SententialForm apply_rule_at(const Grammar& g, const SententialForm& form,
                             std::size_t pos, std::size_t rule_id) {
  if (rule_id >= g.rules.size()) {
    throw InvalidInput("rule id out of range: " + std::to_string(rule_id));
  }
  if (pos >= form.size()) {
    throw PositionOutOfRange("position " + std::to_string(pos) +
                             " out of range for form of length " +
                             std::to_string(form.size()));
  }
  SententialForm out;
  if (const char* reason = detail::try_apply_rule(g, form, pos, rule_id, &out)) {
    throw SymbolMismatch(std::string(reason) + " at position " +
                         std::to_string(pos) + " in [" + form_text(form) + "]");
  }
  return out;
}

}  // namespace cfga
