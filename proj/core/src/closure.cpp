#include "cfga/closure.hpp"

#include <algorithm>

#include "cfga/errors.hpp"

namespace cfga {

namespace {

void require_valid(const Grammar& g, const char* what) {
  const ValidationReport report = validate_grammar(g);
  if (!report.ok()) {
    std::string msg = std::string(what) + " grammar is invalid:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw InvalidInput(msg);
  }
}

void require_accepted_from_start(const Grammar& g, const Derivation& d,
                                 const char* what, CheckResult* result) {
  const SententialForm start{Symbol::nt(g.start)};
  if (d.start != start) {
    throw InvalidInput(std::string(what) + " derivation must start at [" +
                       form_text(start) + "], got [" + form_text(d.start) + "]");
  }
  *result = check_derivation(g, d);
  if (!result->accepted) {
    throw InvalidInput(std::string(what) + " derivation rejected at step " +
                       std::to_string(result->failed_step) + ": " + result->reason);
  }
}

bool form_in_alphabets(const Grammar& g, const SententialForm& form) {
  return std::all_of(form.begin(), form.end(),
                     [&](const Symbol& s) { return g.has_symbol(s); });
}

bool has_side_tag(const Symbol& sym, SideTag side, OpTag op) {
  if (sym.is_nonterminal()) {
    const NtName& nt = sym.nt_name();
    return nt.kind() == NtName::Kind::Lifted && nt.op() == op &&
           nt.side() == side;
  }
  const TName& t = sym.t_name();
  return t.kind() == TName::Kind::Side && t.op() == op && t.side_tag() == side;
}

}  // namespace

Symbol lift_symbol(const LiftSpec& spec, const Symbol& sym) {
  if (sym.is_nonterminal()) {
    return Symbol::nt(NtName::lifted(spec.side, spec.op, sym.nt_name()));
  }
  if (spec.op == OpTag::Clo) return sym;
  return Symbol::t(TName::side(spec.side, spec.op, sym.t_name()));
}

SententialForm lift_form(const LiftSpec& spec, const SententialForm& form) {
  SententialForm out;
  out.reserve(form.size());
  for (const Symbol& sym : form) out.push_back(lift_symbol(spec, sym));
  return out;
}

std::optional<SententialForm> try_unlift_form(const LiftSpec& spec,
                                              const SententialForm& form) {
  SententialForm out;
  out.reserve(form.size());
  for (const Symbol& sym : form) {
    if (sym.is_nonterminal()) {
      const NtName& nt = sym.nt_name();
      if (nt.kind() != NtName::Kind::Lifted || nt.op() != spec.op ||
          nt.side() != spec.side) {
        return std::nullopt;
      }
      out.push_back(Symbol::nt(nt.inner()));
    } else if (spec.op == OpTag::Clo) {
      out.push_back(sym);
    } else {
      const TName& t = sym.t_name();
      if (t.kind() != TName::Kind::Side || t.op() != spec.op ||
          t.side_tag() != spec.side) {
        return std::nullopt;
      }
      out.push_back(Symbol::t(t.inner()));
    }
  }
  return out;
}

Derivation lift_derivation(const LiftSpec& spec, const Derivation& d,
                           std::size_t rule_id_offset) {
  Derivation out;
  out.start = lift_form(spec, d.start);
  out.steps.reserve(d.steps.size());
  for (const Step& step : d.steps) {
    out.steps.push_back(Step{step.pos, step.rule + rule_id_offset});
  }
  return out;
}

Grammar union_grammar(const Grammar& g1, const Grammar& g2) {
  require_valid(g1, "first");
  require_valid(g2, "second");

  const NtName start = NtName::fresh_start(OpTag::Union);
  std::vector<NtName> nts{start};
  for (const auto& nt : g1.nonterminals) {
    nts.push_back(NtName::lifted(SideTag::First, OpTag::Union, nt));
  }
  for (const auto& nt : g2.nonterminals) {
    nts.push_back(NtName::lifted(SideTag::Second, OpTag::Union, nt));
  }
  std::vector<TName> ts;
  for (const auto& t : g1.terminals) {
    ts.push_back(TName::side(SideTag::First, OpTag::Union, t));
  }
  for (const auto& t : g2.terminals) {
    ts.push_back(TName::side(SideTag::Second, OpTag::Union, t));
  }

  std::vector<std::pair<NtName, SententialForm>> rules;
  rules.emplace_back(start, SententialForm{Symbol::nt(NtName::lifted(
                                SideTag::First, OpTag::Union, g1.start))});
  rules.emplace_back(start, SententialForm{Symbol::nt(NtName::lifted(
                                SideTag::Second, OpTag::Union, g2.start))});
  for (const Rule& r : g1.rules) {
    rules.emplace_back(NtName::lifted(SideTag::First, OpTag::Union, r.lhs),
                       lift_form(LiftSpec::union_first(), r.rhs));
  }
  for (const Rule& r : g2.rules) {
    rules.emplace_back(NtName::lifted(SideTag::Second, OpTag::Union, r.lhs),
                       lift_form(LiftSpec::union_second(), r.rhs));
  }
  return make_grammar(start, std::move(nts), std::move(ts), std::move(rules));
}

Grammar concat_grammar(const Grammar& g1, const Grammar& g2) {
  require_valid(g1, "first");
  require_valid(g2, "second");

  const NtName start = NtName::fresh_start(OpTag::Cat);
  std::vector<NtName> nts{start};
  for (const auto& nt : g1.nonterminals) {
    nts.push_back(NtName::lifted(SideTag::First, OpTag::Cat, nt));
  }
  for (const auto& nt : g2.nonterminals) {
    nts.push_back(NtName::lifted(SideTag::Second, OpTag::Cat, nt));
  }
  std::vector<TName> ts;
  for (const auto& t : g1.terminals) {
    ts.push_back(TName::side(SideTag::First, OpTag::Cat, t));
  }
  for (const auto& t : g2.terminals) {
    ts.push_back(TName::side(SideTag::Second, OpTag::Cat, t));
  }

  std::vector<std::pair<NtName, SententialForm>> rules;
  rules.emplace_back(
      start,
      SententialForm{
          Symbol::nt(NtName::lifted(SideTag::First, OpTag::Cat, g1.start)),
          Symbol::nt(NtName::lifted(SideTag::Second, OpTag::Cat, g2.start))});
  for (const Rule& r : g1.rules) {
    rules.emplace_back(NtName::lifted(SideTag::First, OpTag::Cat, r.lhs),
                       lift_form(LiftSpec::cat_first(), r.rhs));
  }
  for (const Rule& r : g2.rules) {
    rules.emplace_back(NtName::lifted(SideTag::Second, OpTag::Cat, r.lhs),
                       lift_form(LiftSpec::cat_second(), r.rhs));
  }
  return make_grammar(start, std::move(nts), std::move(ts), std::move(rules));
}

Grammar kleene_grammar(const Grammar& g) {
  require_valid(g, "source");

  const NtName start = NtName::fresh_start(OpTag::Clo);
  std::vector<NtName> nts{start};
  for (const auto& nt : g.nonterminals) {
    nts.push_back(NtName::lifted(SideTag::First, OpTag::Clo, nt));
  }

  std::vector<std::pair<NtName, SententialForm>> rules;
  rules.emplace_back(
      start, SententialForm{Symbol::nt(start),
                            Symbol::nt(NtName::lifted(SideTag::First,
                                                      OpTag::Clo, g.start))});
  rules.emplace_back(start, SententialForm{});
  for (const Rule& r : g.rules) {
    rules.emplace_back(NtName::lifted(SideTag::First, OpTag::Clo, r.lhs),
                       lift_form(LiftSpec::clo(), r.rhs));
  }
  return make_grammar(start, std::move(nts), g.terminals, std::move(rules));
}

std::size_t union_rule_offset(SideTag side, const Grammar& g1) {
  return side == SideTag::First ? 2 : 2 + g1.rules.size();
}

std::size_t cat_rule_offset(SideTag side, const Grammar& g1) {
  return side == SideTag::First ? 1 : 1 + g1.rules.size();
}

Derivation union_witness(const Grammar& g1, const Grammar& g2, SideTag side,
                         const Derivation& d) {
  const Grammar& source = side == SideTag::First ? g1 : g2;
  CheckResult result = CheckResult::accept({});
  require_accepted_from_start(source, d, "source", &result);

  const LiftSpec spec{OpTag::Union, side};
  const Derivation lifted =
      lift_derivation(spec, d, union_rule_offset(side, g1));

  Derivation out;
  out.start = {Symbol::nt(NtName::fresh_start(OpTag::Union))};
  out.steps.reserve(d.steps.size() + 1);
  out.steps.push_back(Step{0, side == SideTag::First ? 0u : 1u});
  out.steps.insert(out.steps.end(), lifted.steps.begin(), lifted.steps.end());
  return out;
}

Derivation cat_witness(const Grammar& g1, const Grammar& g2,
                       const Derivation& d1, const Derivation& d2) {
  CheckResult r1 = CheckResult::accept({});
  CheckResult r2 = CheckResult::accept({});
  require_accepted_from_start(g1, d1, "first", &r1);
  require_accepted_from_start(g2, d2, "second", &r2);

  const Grammar cat = concat_grammar(g1, g2);
  const Derivation base{{Symbol::nt(cat.start)}, {Step{0, 0}}};

  const SententialForm pending_second{
      Symbol::nt(NtName::lifted(SideTag::Second, OpTag::Cat, g2.start))};
  const Derivation first_part = embed_derivation(
      cat,
      lift_derivation(LiftSpec::cat_first(), d1,
                      cat_rule_offset(SideTag::First, g1)),
      {}, pending_second);

  const SententialForm finished_first =
      lift_form(LiftSpec::cat_first(), r1.final_form);
  const Derivation second_part = embed_derivation(
      cat,
      lift_derivation(LiftSpec::cat_second(), d2,
                      cat_rule_offset(SideTag::Second, g1)),
      finished_first, {});

  return compose_derivations(cat, compose_derivations(cat, base, first_part),
                             second_part);
}

Derivation clo_witness(const Grammar& g, const std::vector<Derivation>& ds) {
  const Grammar clo = kleene_grammar(g);
  const SententialForm lifted_start{
      Symbol::nt(NtName::lifted(SideTag::First, OpTag::Clo, g.start))};

  // Base case: erase the start symbol, deriving the empty form.
  Derivation current{{Symbol::nt(clo.start)}, {Step{0, 1}}};
  SententialForm prefix;

  for (const Derivation& d : ds) {
    CheckResult r = CheckResult::accept({});
    require_accepted_from_start(g, d, "segment", &r);

    const Derivation grow{{Symbol::nt(clo.start)}, {Step{0, 0}}};
    const Derivation previous =
        embed_derivation(clo, current, {}, lifted_start);
    const Derivation segment = embed_derivation(
        clo, lift_derivation(LiftSpec::clo(), d, kKleeneRuleOffset), prefix,
        {});
    current = compose_derivations(
        clo, compose_derivations(clo, grow, previous), segment);
    prefix = concat_forms(prefix, lift_form(LiftSpec::clo(), r.final_form));
  }
  return current;
}

UnionClassification union_classify(const Grammar& g1, const Grammar& g2,
                                   const SententialForm& s) {
  const SententialForm start_form{
      Symbol::nt(NtName::fresh_start(OpTag::Union))};
  if (s == start_form) {
    return UnionClassification{UnionClassification::Kind::StartForm, {}};
  }
  if (auto s1 = try_unlift_form(LiftSpec::union_first(), s);
      s1 && form_in_alphabets(g1, *s1)) {
    return UnionClassification{UnionClassification::Kind::FromFirst,
                               std::move(*s1)};
  }
  if (auto s2 = try_unlift_form(LiftSpec::union_second(), s);
      s2 && form_in_alphabets(g2, *s2)) {
    return UnionClassification{UnionClassification::Kind::FromSecond,
                               std::move(*s2)};
  }
  return UnionClassification{UnionClassification::Kind::NotLifted, {}};
}

CatDecomposer::CatDecomposer(const Grammar& g1, const Grammar& g2,
                             const SearchBounds& bounds)
    : g1_(g1),
      g2_(g2),
      bounds_(bounds),
      cat_start_form_{Symbol::nt(NtName::fresh_start(OpTag::Cat))} {
  require_valid(g1, "first");
  require_valid(g2, "second");
  first_oracle_ = std::make_unique<FormIndex>(
      g1_, SententialForm{Symbol::nt(g1_.start)}, bounds);
  second_oracle_ = std::make_unique<FormIndex>(
      g2_, SententialForm{Symbol::nt(g2_.start)}, bounds);
}

std::optional<CatDecomposition> CatDecomposer::decompose(
    const SententialForm& s) const {
  if (s == cat_start_form_) {
    // The transient start form maps to the two start symbols with reflexive
    // witnesses; it is not itself a lifted concatenation.
    const SententialForm s1{Symbol::nt(g1_.start)};
    const SententialForm s2{Symbol::nt(g2_.start)};
    return CatDecomposition{s1, s2, Derivation{s1, {}}, Derivation{s2, {}}};
  }

  const auto boundary_it =
      std::find_if(s.begin(), s.end(), [](const Symbol& sym) {
        return has_side_tag(sym, SideTag::Second, OpTag::Cat);
      });
  const auto boundary =
      static_cast<std::size_t>(boundary_it - s.begin());

  const SententialForm first_half(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(boundary));
  const SententialForm second_half(s.begin() + static_cast<std::ptrdiff_t>(boundary), s.end());

  auto s1 = try_unlift_form(LiftSpec::cat_first(), first_half);
  if (!s1 || !form_in_alphabets(g1_, *s1)) return std::nullopt;
  auto s2 = try_unlift_form(LiftSpec::cat_second(), second_half);
  if (!s2 || !form_in_alphabets(g2_, *s2)) return std::nullopt;
  if (s1->size() > bounds_.max_len || s2->size() > bounds_.max_len) {
    return std::nullopt;
  }

  auto d1 = first_oracle_->derivation_of(*s1);
  if (!d1) return std::nullopt;
  auto d2 = second_oracle_->derivation_of(*s2);
  if (!d2) return std::nullopt;
  return CatDecomposition{std::move(*s1), std::move(*s2), std::move(*d1),
                          std::move(*d2)};
}

CloDecomposer::CloDecomposer(const Grammar& g, const SearchBounds& bounds)
    : g_(g), clo_(kleene_grammar(g)), bounds_(bounds) {
  clo_oracle_ = std::make_unique<FormIndex>(
      clo_, SententialForm{Symbol::nt(clo_.start)}, bounds);
  source_oracle_ = std::make_unique<FormIndex>(
      g_, SententialForm{Symbol::nt(g_.start)}, bounds);
}

std::optional<CloDecomposition> CloDecomposer::decompose(
    const SententialForm& s) const {
  if (s.empty()) {
    return CloDecomposition{CloDecomposition::Kind::EmptyForm, {}, {}, {}, {}};
  }
  const SententialForm start_form{Symbol::nt(clo_.start)};
  if (s == start_form) {
    return CloDecomposition{CloDecomposition::Kind::StartForm, {}, {}, {}, {}};
  }

  for (std::size_t tail_len = s.size() + 1; tail_len-- > 0;) {
    const auto split = s.end() - static_cast<std::ptrdiff_t>(tail_len);
    const SententialForm suffix(split, s.end());
    auto tail = try_unlift_form(LiftSpec::clo(), suffix);
    if (!tail || !form_in_alphabets(g_, *tail)) continue;
    if (tail->size() > bounds_.max_len) continue;

    SententialForm prefix(s.begin(), split);
    if (prefix.size() > bounds_.max_len) continue;
    auto prefix_witness = clo_oracle_->derivation_of(prefix);
    if (!prefix_witness) continue;
    auto tail_witness = source_oracle_->derivation_of(*tail);
    if (!tail_witness) continue;
    return CloDecomposition{CloDecomposition::Kind::Split, std::move(prefix),
                            std::move(*tail), std::move(*prefix_witness),
                            std::move(*tail_witness)};
  }
  return std::nullopt;
}

std::optional<CatDecomposition> cat_decompose(const Grammar& g1,
                                              const Grammar& g2,
                                              const SententialForm& s,
                                              const SearchBounds& bounds) {
  return CatDecomposer(g1, g2, bounds).decompose(s);
}

std::optional<CloDecomposition> clo_decompose(const Grammar& g,
                                              const SententialForm& s,
                                              const SearchBounds& bounds) {
  return CloDecomposer(g, bounds).decompose(s);
}

}  // namespace cfga
