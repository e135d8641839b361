#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfga {

/// Base class for all errors raised by this library. Rejections that are
/// ordinary results (a failed derivation check, an absent decomposition)
/// are returned as data, never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A step addresses a position outside the current sentential form.
class PositionOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The addressed symbol is a terminal or a different nonterminal than the
/// rule's left-hand side.
class SymbolMismatch : public Error {
 public:
  using Error::Error;
};

/// Two derivations do not fit together: the first one's final form differs
/// from the second one's start form.
class FormMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on an input value was violated (invalid grammar, rejected
/// certificate, bad name, arity mismatch).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Bounded search ran out of its explored-form budget before it could either
/// find a witness or refute its existence. Distinct from "absent": absent
/// means exhaustively refuted within the bounds.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t explored, std::size_t cap)
      : Error("explored-form budget exceeded: " + std::to_string(explored) +
              " forms explored, cap " + std::to_string(cap)),
        explored_(explored),
        cap_(cap) {}

  std::size_t explored() const { return explored_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t explored_;
  std::size_t cap_;
};

/// Malformed input text. `line` is 1-based; 0 means "not tied to a line"
/// (e.g. a bare symbol string).
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& reason)
      : Error(line == 0 ? reason : "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed syntax describing an invalid grammar.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& vs) {
    std::string out = "invalid grammar:";
    for (const auto& v : vs) {
      out += "\n  - " + v;
    }
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace cfga
