#pragma once

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "cfga/derivation.hpp"
#include "cfga/grammar.hpp"
#include "cfga/text.hpp"

namespace cfga::test {

// The fixed corpus used throughout the tests.
inline Grammar g_a() { return parse_grammar("start: S\nnonterminals: S\nterminals: 'a'\nrule: S -> 'a'\n"); }
inline Grammar g_b() { return parse_grammar("start: S\nnonterminals: S\nterminals: 'b'\nrule: S -> 'b'\n"); }
inline Grammar g_ab() {
  return parse_grammar(
      "start: S\nnonterminals: S\nterminals: 'a' 'b'\n"
      "rule: S -> 'a' S 'b'\nrule: S ->\n");
}
inline Grammar g_amb() {
  return parse_grammar(
      "start: S\nnonterminals: S\nterminals: 'a'\n"
      "rule: S -> S S\nrule: S -> 'a'\n");
}
inline Grammar g_eps() {
  return parse_grammar("start: S\nnonterminals: S\nterminals:\nrule: S ->\n");
}
inline Grammar g_two() {
  return parse_grammar(
      "start: S\nnonterminals: A S\nterminals: 'a' 'b'\n"
      "rule: S -> A 'b'\nrule: A -> 'a'\nrule: A ->\n");
}

inline std::vector<std::pair<std::string, Grammar>> fixed_corpus() {
  return {{"G_a", g_a()},     {"G_b", g_b()},   {"G_ab", g_ab()},
          {"G_amb", g_amb()}, {"G_eps", g_eps()}, {"G_two", g_two()}};
}

// All (pos, rule) pairs applicable to the form, position-major.
inline std::vector<Step> applicable_steps(const Grammar& g,
                                          const SententialForm& form) {
  std::vector<Step> out;
  for (std::size_t pos = 0; pos < form.size(); ++pos) {
    if (!form[pos].is_nonterminal()) continue;
    for (const Rule& r : g.rules) {
      if (r.lhs == form[pos].nt_name()) out.push_back(Step{pos, r.id});
    }
  }
  return out;
}

// A random accepted derivation: up to max_steps uniformly chosen applicable
// steps from `from`.
inline Derivation random_walk(const Grammar& g, SententialForm from,
                              std::size_t max_steps, std::mt19937_64& rng) {
  Derivation d{std::move(from), {}};
  SententialForm form = d.start;
  for (std::size_t i = 0; i < max_steps; ++i) {
    const auto steps = applicable_steps(g, form);
    if (steps.empty()) break;
    const Step step = steps[rng() % steps.size()];
    form = apply_rule_at(g, form, step.pos, step.rule);
    d.steps.push_back(step);
  }
  return d;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::uint64_t counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("cfga_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace cfga::test
