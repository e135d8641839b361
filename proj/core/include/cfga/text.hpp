#pragma once

#include <string>
#include <string_view>

#include "cfga/derivation.hpp"
#include "cfga/grammar.hpp"
#include "cfga/symbols.hpp"

namespace cfga {

/// Parses one serialized symbol token: `S`, `@uni`, `<1:cat:<2:uni:S>>`,
/// `'a'`, `<2:uni:'b'>`, ... Throws SyntaxError (line 0) on malformed input.
Symbol parse_symbol(std::string_view token);

/// Parses a whitespace-separated sequence of symbol tokens; the empty (or
/// all-space) string is the empty form.
SententialForm parse_form(std::string_view text);

/// Parses the line-based grammar format:
///
///   start: <NT>              (exactly once)
///   nonterminals: <NT> ...   (exactly once; list may be empty)
///   terminals: <T> ...       (exactly once; list may be empty)
///   rule: <NT> -> <sym> ...  (zero or more; empty rhs written `rule: <NT> ->`)
///
/// Lines starting with `#` are comments; blank lines are ignored; the
/// directives may appear in any order. Throws SyntaxError with a 1-based
/// line number, or ValidationError when the syntax is well-formed but the
/// grammar breaks an invariant. parse_grammar ∘ serialize_grammar is the
/// identity on valid grammars.
Grammar parse_grammar(std::string_view text);

/// Canonical serialization: start, nonterminals, terminals (alphabets in
/// their stored shortlex order), then rules in id order; single spaces; one
/// trailing newline per line. Byte-identical across runs.
std::string serialize_grammar(const Grammar& g);

/// Parses the certificate format:
///
///   from: <sym> ...
///   step: pos=<int> rule=<int>   (zero or more)
///
/// Throws SyntaxError (negative or malformed numbers included).
Derivation parse_certificate(std::string_view text);

std::string serialize_certificate(const Derivation& d);

}  // namespace cfga
