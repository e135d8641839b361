#include "cfga/text.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "cfga/errors.hpp"

namespace cfga {

namespace {

bool name_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_';
}

// Recursive-descent parser over a single token. The leaf decides whether the
// symbol is a nonterminal or a terminal; wrappers must agree with it.
class SymbolParser {
 public:
  explicit SymbolParser(std::string_view token) : tok_(token) {}

  Symbol parse() {
    Symbol sym = parse_inner();
    if (at_ != tok_.size()) {
      fail("trailing characters after symbol");
    }
    return sym;
  }

 private:
  Symbol parse_inner() {
    if (at_ >= tok_.size()) fail("empty symbol");
    const char c = tok_[at_];
    if (c == '\'') return parse_terminal_leaf();
    if (c == '@') return parse_fresh_start();
    if (c == '<') return parse_wrapped();
    if (name_char(c)) return parse_plain_nonterminal();
    fail(std::string("unexpected character '") + c + "'");
  }

  Symbol parse_terminal_leaf() {
    ++at_;  // opening quote
    const std::size_t begin = at_;
    while (at_ < tok_.size() && name_char(tok_[at_])) ++at_;
    if (at_ == begin) fail("empty terminal name");
    if (at_ >= tok_.size() || tok_[at_] != '\'') {
      fail("unterminated terminal quote");
    }
    const std::string_view name = tok_.substr(begin, at_ - begin);
    ++at_;  // closing quote
    return Symbol::t(TName::plain(name));
  }

  Symbol parse_fresh_start() {
    ++at_;  // '@'
    const std::size_t begin = at_;
    while (at_ < tok_.size() && name_char(tok_[at_])) ++at_;
    const std::string_view name = tok_.substr(begin, at_ - begin);
    if (name == "uni") return Symbol::nt(NtName::fresh_start(OpTag::Union));
    if (name == "cat") return Symbol::nt(NtName::fresh_start(OpTag::Cat));
    if (name == "clo") return Symbol::nt(NtName::fresh_start(OpTag::Clo));
    fail("unknown fresh start '@" + std::string(name) + "'");
  }

  Symbol parse_plain_nonterminal() {
    const std::size_t begin = at_;
    while (at_ < tok_.size() && name_char(tok_[at_])) ++at_;
    return Symbol::nt(NtName::plain(tok_.substr(begin, at_ - begin)));
  }

  Symbol parse_wrapped() {
    ++at_;  // '<'
    if (at_ >= tok_.size() || (tok_[at_] != '1' && tok_[at_] != '2')) {
      fail("expected side 1 or 2 after '<'");
    }
    const SideTag side = tok_[at_] == '1' ? SideTag::First : SideTag::Second;
    ++at_;
    expect(':');
    const std::size_t op_begin = at_;
    while (at_ < tok_.size() && name_char(tok_[at_])) ++at_;
    const std::string_view op_text = tok_.substr(op_begin, at_ - op_begin);
    std::optional<OpTag> op;
    if (op_text == "uni") op = OpTag::Union;
    if (op_text == "cat") op = OpTag::Cat;
    if (op_text == "clo") op = OpTag::Clo;
    if (!op) fail("unknown operation tag '" + std::string(op_text) + "'");
    expect(':');
    const Symbol inner = parse_inner();
    expect('>');

    if (inner.is_nonterminal()) {
      if (*op == OpTag::Clo && side != SideTag::First) {
        fail("closure lifting has no second side");
      }
      return Symbol::nt(NtName::lifted(side, *op, inner.nt_name()));
    }
    if (*op == OpTag::Clo) fail("closure never wraps terminals");
    return Symbol::t(TName::side(side, *op, inner.t_name()));
  }

  void expect(char c) {
    if (at_ >= tok_.size() || tok_[at_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++at_;
  }

  [[noreturn]] void fail(const std::string& reason) {
    throw SyntaxError(0, "bad symbol '" + std::string(tok_) + "': " + reason);
  }

  std::string_view tok_;
  std::size_t at_ = 0;
};

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    const std::size_t begin = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > begin) out.push_back(text.substr(begin, i - begin));
  }
  return out;
}

NtName expect_nonterminal(std::string_view token, std::size_t line) {
  try {
    const Symbol sym = parse_symbol(token);
    if (!sym.is_nonterminal()) {
      throw SyntaxError(line, "expected a nonterminal, got terminal '" +
                                  std::string(token) + "'");
    }
    return sym.nt_name();
  } catch (const SyntaxError& e) {
    if (e.line() != 0) throw;
    throw SyntaxError(line, e.what());
  }
}

TName expect_terminal(std::string_view token, std::size_t line) {
  try {
    const Symbol sym = parse_symbol(token);
    if (!sym.is_terminal()) {
      throw SyntaxError(line, "expected a terminal, got nonterminal '" +
                                  std::string(token) + "'");
    }
    return sym.t_name();
  } catch (const SyntaxError& e) {
    if (e.line() != 0) throw;
    throw SyntaxError(line, e.what());
  }
}

std::size_t parse_count(std::string_view text, std::string_view what,
                        std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw SyntaxError(line, "bad " + std::string(what) + " '" +
                                std::string(text) + "': expected a " +
                                "nonnegative integer");
  }
  return value;
}

// Splits into lines, dropping blank and comment lines; tolerates a trailing
// '\r'. Returns (1-based line number, content) pairs.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = 0;
    while (first < line.size() && (line[first] == ' ' || line[first] == '\t')) {
      ++first;
    }
    if (first < line.size() && line[first] != '#') {
      out.emplace_back(line_no, line);
    }
    if (end == text.size()) break;
    begin = end + 1;
  }
  return out;
}

}  // namespace

Symbol parse_symbol(std::string_view token) {
  try {
    return SymbolParser(token).parse();
  } catch (const InvalidInput& e) {
    throw SyntaxError(0, e.what());
  }
}

SententialForm parse_form(std::string_view text) {
  SententialForm out;
  for (const auto token : split_tokens(text)) {
    out.push_back(parse_symbol(token));
  }
  return out;
}

Grammar parse_grammar(std::string_view text) {
  std::optional<NtName> start;
  std::optional<std::vector<NtName>> nonterminals;
  std::optional<std::vector<TName>> terminals;
  std::vector<std::pair<NtName, SententialForm>> rules;

  for (const auto& [line_no, line] : content_lines(text)) {
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    const std::string_view head = tokens.front();

    if (head == "start:") {
      if (tokens.size() != 2) {
        throw SyntaxError(line_no, "start: takes exactly one nonterminal");
      }
      if (start) throw SyntaxError(line_no, "start: declared twice");
      start = expect_nonterminal(tokens[1], line_no);
    } else if (head == "nonterminals:") {
      if (nonterminals) {
        throw SyntaxError(line_no, "nonterminals: declared twice");
      }
      nonterminals.emplace();
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        nonterminals->push_back(expect_nonterminal(tokens[i], line_no));
      }
    } else if (head == "terminals:") {
      if (terminals) throw SyntaxError(line_no, "terminals: declared twice");
      terminals.emplace();
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        terminals->push_back(expect_terminal(tokens[i], line_no));
      }
    } else if (head == "rule:") {
      if (tokens.size() < 3 || tokens[2] != "->") {
        throw SyntaxError(line_no, "rule: expects '<NT> -> <sym> ...'");
      }
      const NtName lhs = expect_nonterminal(tokens[1], line_no);
      SententialForm rhs;
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        try {
          rhs.push_back(parse_symbol(tokens[i]));
        } catch (const SyntaxError& e) {
          throw SyntaxError(line_no, e.what());
        }
      }
      rules.emplace_back(lhs, std::move(rhs));
    } else {
      throw SyntaxError(line_no,
                        "unknown directive '" + std::string(head) + "'");
    }
  }

  if (!start) throw SyntaxError(0, "missing start: line");
  if (!nonterminals) throw SyntaxError(0, "missing nonterminals: line");
  if (!terminals) throw SyntaxError(0, "missing terminals: line");

  Grammar g = make_grammar(std::move(*start), std::move(*nonterminals),
                           std::move(*terminals), std::move(rules));
  const ValidationReport report = validate_grammar(g);
  if (!report.ok()) throw ValidationError(report.violations);
  return g;
}

std::string serialize_grammar(const Grammar& g) {
  std::string out = "start: " + g.start.text() + "\n";
  out += "nonterminals:";
  for (const auto& nt : g.nonterminals) out += " " + nt.text();
  out += "\nterminals:";
  for (const auto& t : g.terminals) out += " " + t.text();
  out += "\n";
  for (const Rule& r : g.rules) {
    out += "rule: " + r.lhs.text() + " ->";
    for (const Symbol& sym : r.rhs) out += " " + sym.text();
    out += "\n";
  }
  return out;
}

Derivation parse_certificate(std::string_view text) {
  std::optional<SententialForm> from;
  std::vector<Step> steps;

  for (const auto& [line_no, line] : content_lines(text)) {
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    const std::string_view head = tokens.front();

    if (head == "from:") {
      if (from) throw SyntaxError(line_no, "from: declared twice");
      from.emplace();
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        try {
          from->push_back(parse_symbol(tokens[i]));
        } catch (const SyntaxError& e) {
          throw SyntaxError(line_no, e.what());
        }
      }
    } else if (head == "step:") {
      if (!from) {
        throw SyntaxError(line_no, "step: before from:");
      }
      if (tokens.size() != 3 || !tokens[1].starts_with("pos=") ||
          !tokens[2].starts_with("rule=")) {
        throw SyntaxError(line_no, "step: expects 'pos=<int> rule=<int>'");
      }
      const std::size_t pos =
          parse_count(tokens[1].substr(4), "position", line_no);
      const std::size_t rule =
          parse_count(tokens[2].substr(5), "rule id", line_no);
      steps.push_back(Step{pos, rule});
    } else {
      throw SyntaxError(line_no,
                        "unknown directive '" + std::string(head) + "'");
    }
  }

  if (!from) throw SyntaxError(0, "missing from: line");
  return Derivation{std::move(*from), std::move(steps)};
}

std::string serialize_certificate(const Derivation& d) {
  std::string out = "from:";
  for (const Symbol& sym : d.start) out += " " + sym.text();
  out += "\n";
  for (const Step& step : d.steps) {
    out += "step: pos=" + std::to_string(step.pos) +
           " rule=" + std::to_string(step.rule) + "\n";
  }
  return out;
}

}  // namespace cfga
