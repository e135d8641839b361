#include "cfga/symbols.hpp"

#include <algorithm>

#include "cfga/errors.hpp"

namespace cfga {

namespace {

bool valid_plain_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

std::string wrapped_text(SideTag side, OpTag op, const std::string& inner) {
  std::string out = "<";
  out += static_cast<char>('0' + side_number(side));
  out += ':';
  out += op_name(op);
  out += ':';
  out += inner;
  out += '>';
  return out;
}

}  // namespace

std::string_view op_name(OpTag op) {
  switch (op) {
    case OpTag::Union: return "uni";
    case OpTag::Cat: return "cat";
    case OpTag::Clo: return "clo";
  }
  return "?";
}

int side_number(SideTag side) { return side == SideTag::First ? 1 : 2; }

NtName NtName::plain(std::string_view name) {
  if (!valid_plain_name(name)) {
    throw InvalidInput("invalid nonterminal name '" + std::string(name) +
                       "': expected nonempty [A-Za-z0-9_]+");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Plain;
  node->name = std::string(name);
  node->text = node->name;
  return NtName(std::move(node));
}

NtName NtName::fresh_start(OpTag op) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::FreshStart;
  node->op = op;
  node->text = "@" + std::string(op_name(op));
  return NtName(std::move(node));
}

NtName NtName::lifted(SideTag side, OpTag op, const NtName& inner) {
  if (op == OpTag::Clo && side != SideTag::First) {
    throw InvalidInput("closure lifting has no second side");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Lifted;
  node->op = op;
  node->side = side;
  node->inner = inner.node_;
  node->text = wrapped_text(side, op, inner.text());
  return NtName(std::move(node));
}

TName TName::plain(std::string_view name) {
  if (!valid_plain_name(name)) {
    throw InvalidInput("invalid terminal name '" + std::string(name) +
                       "': expected nonempty [A-Za-z0-9_]+");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Plain;
  node->name = std::string(name);
  node->text = "'" + node->name + "'";
  return TName(std::move(node));
}

TName TName::side(SideTag side, OpTag op, const TName& inner) {
  if (op == OpTag::Clo) {
    throw InvalidInput("closure never wraps terminals");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Side;
  node->op = op;
  node->side = side;
  node->inner = inner.node_;
  node->text = wrapped_text(side, op, inner.text());
  return TName(std::move(node));
}

std::string form_text(const SententialForm& form) {
  std::string out;
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (i > 0) out += ' ';
    out += form[i].text();
  }
  return out;
}

bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

SententialForm concat_forms(const SententialForm& a, const SententialForm& b) {
  SententialForm out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace cfga
