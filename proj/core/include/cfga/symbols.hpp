#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cfga {

/// Which construction introduced a wrapper: grammar union, concatenation or
/// Kleene closure.
enum class OpTag { Union, Cat, Clo };

/// Which operand of a binary construction a symbol was lifted from. Kleene
/// closure is unary; only First is legal there.
enum class SideTag { First, Second };

std::string_view op_name(OpTag op);    // "uni" / "cat" / "clo"
int side_number(SideTag side);         // 1 / 2

/// A nonterminal name. Either a plain user-written name, the fresh start
/// symbol introduced by a construction (@uni/@cat/@clo), or a source
/// nonterminal lifted into a constructed grammar (<1:uni:S>, ...). Wrapping
/// nests, so provenance through stacked constructions is fully recorded.
///
/// Values are immutable and cheap to copy (shared internal node). The
/// serialized text is computed once at construction; it is injective over the
/// structure, so text equality *is* structural equality.
class NtName {
 public:
  enum class Kind { Plain, FreshStart, Lifted };

  /// Plain names are restricted to [A-Za-z0-9_]+ so that serialization can
  /// never collide with the @/</' syntax. Throws InvalidInput otherwise.
  static NtName plain(std::string_view name);
  static NtName fresh_start(OpTag op);
  /// Throws InvalidInput for Lifted(Second, Clo, _).
  static NtName lifted(SideTag side, OpTag op, const NtName& inner);

  Kind kind() const { return node_->kind; }
  const std::string& plain_name() const { return node_->name; }  // Plain only
  OpTag op() const { return node_->op; }                         // FreshStart/Lifted
  SideTag side() const { return node_->side; }                   // Lifted only
  NtName inner() const { return NtName(node_->inner); }          // Lifted only

  const std::string& text() const { return node_->text; }

  friend bool operator==(const NtName& a, const NtName& b) {
    return a.node_ == b.node_ || a.node_->text == b.node_->text;
  }
  friend bool operator!=(const NtName& a, const NtName& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    OpTag op{};
    SideTag side{};
    std::string name;                    // Plain
    std::shared_ptr<const Node> inner;   // Lifted
    std::string text;
  };

  explicit NtName(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A terminal name: a plain name (serialized quoted, 'a') or a source
/// terminal tagged with its side in a union/concatenation. Kleene closure
/// never wraps terminals.
class TName {
 public:
  enum class Kind { Plain, Side };

  static TName plain(std::string_view name);
  /// Throws InvalidInput for op == Clo (closure keeps terminals unchanged).
  static TName side(SideTag side, OpTag op, const TName& inner);

  Kind kind() const { return node_->kind; }
  const std::string& plain_name() const { return node_->name; }  // Plain only
  OpTag op() const { return node_->op; }                         // Side only
  SideTag side_tag() const { return node_->side; }               // Side only
  TName inner() const { return TName(node_->inner); }            // Side only

  const std::string& text() const { return node_->text; }

  friend bool operator==(const TName& a, const TName& b) {
    return a.node_ == b.node_ || a.node_->text == b.node_->text;
  }
  friend bool operator!=(const TName& a, const TName& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    OpTag op{};
    SideTag side{};
    std::string name;
    std::shared_ptr<const Node> inner;
    std::string text;
  };

  explicit TName(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// One element of a sentential form: a nonterminal or a terminal.
class Symbol {
 public:
  static Symbol nt(NtName name) { return Symbol(std::move(name)); }
  static Symbol t(TName name) { return Symbol(std::move(name)); }

  bool is_nonterminal() const { return std::holds_alternative<NtName>(value_); }
  bool is_terminal() const { return !is_nonterminal(); }
  const NtName& nt_name() const { return std::get<NtName>(value_); }
  const TName& t_name() const { return std::get<TName>(value_); }

  const std::string& text() const {
    return is_nonterminal() ? nt_name().text() : t_name().text();
  }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    // Nonterminal and terminal serializations never coincide (terminals are
    // quoted at the leaf), so comparing texts is safe across kinds.
    return a.text() == b.text();
  }
  friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }

 private:
  explicit Symbol(NtName n) : value_(std::move(n)) {}
  explicit Symbol(TName t) : value_(std::move(t)) {}

  std::variant<NtName, TName> value_;
};

/// A finite, possibly empty sequence of symbols.
using SententialForm = std::vector<Symbol>;

/// Canonical serialization: symbol texts joined by single spaces. The empty
/// form serializes to the empty string.
std::string form_text(const SententialForm& form);

/// Shortlex order on serialized text: shorter first, ties by byte order.
/// This is the deterministic order used for every set-valued output.
bool shortlex_less(std::string_view a, std::string_view b);

SententialForm concat_forms(const SententialForm& a, const SententialForm& b);

}  // namespace cfga
