#include "cfga/harness.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "cfga/derivation.hpp"
#include "cfga/errors.hpp"
#include "cfga/search.hpp"

namespace cfga {

namespace {

constexpr std::string_view kTheoremNames[] = {
    "uni_correct",   "uni_correct_inv", "cat_correct",
    "cat_correct_inv", "clo_correct",   "clo_correct_inv",
    "derives_trans", "derives_context_free_add",
};

SearchBounds search_bounds(const CheckBounds& b) {
  return SearchBounds{b.max_steps, b.max_len, b.form_cap};
}

SearchBounds oracle_bounds(const CheckBounds& b) {
  // Inverse checks give the source oracle one step less than the
  // constructed-grammar enumeration: a k-step constructed derivation spends
  // one step on its start rule.
  return SearchBounds{b.max_steps == 0 ? 0 : b.max_steps - 1, b.max_len,
                      b.form_cap};
}

SententialForm start_form(const Grammar& g) {
  return SententialForm{Symbol::nt(g.start)};
}

// Shared state of one theorem check: inputs, bounds, case counting and
// report construction. Iteration over forms is shortlex-ordered everywhere,
// so a Fail report carries the first failing form in that order.
struct Check {
  TheoremId id;
  std::vector<CorpusEntry> inputs;
  const Grammar* constructed_override = nullptr;
  CheckBounds bounds;
  std::size_t cases = 0;

  std::string inputs_label() const {
    std::string out = "(";
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (i > 0) out += ",";
      out += inputs[i].name;
    }
    out += ")";
    if (constructed_override != nullptr && !mutant_label.empty()) {
      out += "[mutant:" + mutant_label + "]";
    }
    return out;
  }

  bool spend_case() {
    if (cases >= bounds.max_cases) return false;
    ++cases;
    return true;
  }

  TheoremReport pass() const {
    return TheoremReport{id,      inputs_label(), bounds.text(),
                         TheoremReport::Outcome::Pass, cases, "", std::nullopt};
  }

  TheoremReport fail(const SententialForm& form, const std::string& reason) const {
    Counterexample cex{inputs, std::nullopt, form, reason};
    if (constructed_override != nullptr) cex.constructed = *constructed_override;
    const std::string detail = "form=[" + form_text(form) + "]: " + reason;
    return TheoremReport{id,      inputs_label(), bounds.text(),
                         TheoremReport::Outcome::Fail, cases, detail,
                         std::move(cex)};
  }

  TheoremReport inconclusive(const std::string& detail) const {
    return TheoremReport{id,      inputs_label(), bounds.text(),
                         TheoremReport::Outcome::Inconclusive, cases, detail,
                         std::nullopt};
  }

  TheoremReport case_budget_report() const {
    return inconclusive("case budget exceeded after " +
                        std::to_string(cases) + " cases");
  }

  std::string mutant_label;
};

const Grammar& g_of(const Check& c, std::size_t i) {
  return c.inputs[i].grammar;
}

// --- direct theorems ---------------------------------------------------

TheoremReport run_uni_correct(Check& c) {
  const Grammar& g1 = g_of(c, 0);
  const Grammar& g2 = g_of(c, 1);
  const Grammar uni = union_grammar(g1, g2);

  for (const SideTag side : {SideTag::First, SideTag::Second}) {
    const Grammar& src = side == SideTag::First ? g1 : g2;
    const LiftSpec spec{OpTag::Union, side};
    const FormIndex index(src, start_form(src), search_bounds(c.bounds));
    for (const RankedForm& rf : index.forms()) {
      if (!c.spend_case()) return c.case_budget_report();
      const Derivation d = *index.derivation_of(rf.form);
      const Derivation w = union_witness(g1, g2, side, d);
      const CheckResult r = check_derivation(uni, w);
      if (!r.accepted) {
        return c.fail(rf.form, "union witness rejected at step " +
                                   std::to_string(r.failed_step) + ": " + r.reason);
      }
      if (r.final_form != lift_form(spec, rf.form)) {
        return c.fail(rf.form, "union witness final form mismatch");
      }
      if (w.step_count() != d.step_count() + 1) {
        return c.fail(rf.form, "union witness step count not steps+1");
      }
    }
  }
  return c.pass();
}

TheoremReport run_cat_correct(Check& c) {
  const Grammar& g1 = g_of(c, 0);
  const Grammar& g2 = g_of(c, 1);
  const Grammar cat = concat_grammar(g1, g2);

  const FormIndex index1(g1, start_form(g1), search_bounds(c.bounds));
  const FormIndex index2(g2, start_form(g2), search_bounds(c.bounds));
  for (const RankedForm& rf1 : index1.forms()) {
    const Derivation d1 = *index1.derivation_of(rf1.form);
    for (const RankedForm& rf2 : index2.forms()) {
      if (!c.spend_case()) return c.case_budget_report();
      const Derivation d2 = *index2.derivation_of(rf2.form);
      const SententialForm expected =
          concat_forms(lift_form(LiftSpec::cat_first(), rf1.form),
                       lift_form(LiftSpec::cat_second(), rf2.form));
      const Derivation w = cat_witness(g1, g2, d1, d2);
      const CheckResult r = check_derivation(cat, w);
      if (!r.accepted) {
        return c.fail(expected, "cat witness rejected at step " +
                                    std::to_string(r.failed_step) + ": " + r.reason);
      }
      if (r.final_form != expected) {
        return c.fail(expected, "cat witness final form mismatch");
      }
      if (w.step_count() != d1.step_count() + d2.step_count() + 1) {
        return c.fail(expected, "cat witness step count not steps1+steps2+1");
      }
    }
  }
  return c.pass();
}

TheoremReport run_clo_correct(Check& c) {
  const Grammar& g = g_of(c, 0);
  const Grammar clo = kleene_grammar(g);

  const FormIndex index(g, start_form(g), search_bounds(c.bounds));
  const auto& forms = index.forms();
  std::vector<Derivation> derivations;
  derivations.reserve(forms.size());
  for (const RankedForm& rf : forms) {
    derivations.push_back(*index.derivation_of(rf.form));
  }

  // All segment sequences of length 0..max_segments, in lexicographic order
  // over the shortlex-sorted form list.
  const auto advance = [&](std::vector<std::size_t>& pick) {
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (++pick[i] < forms.size()) return true;
      pick[i] = 0;
    }
    return false;
  };
  for (std::size_t n = 0; n <= c.bounds.max_segments; ++n) {
    std::vector<std::size_t> pick(n, 0);
    do {
      if (!c.spend_case()) return c.case_budget_report();
      std::vector<Derivation> ds;
      SententialForm expected;
      std::size_t source_steps = 0;
      ds.reserve(n);
      for (const std::size_t i : pick) {
        ds.push_back(derivations[i]);
        expected = concat_forms(
            expected, lift_form(LiftSpec::clo(), forms[i].form));
        source_steps += derivations[i].step_count();
      }
      const Derivation w = clo_witness(g, ds);
      const CheckResult r = check_derivation(clo, w);
      if (!r.accepted) {
        return c.fail(expected, "closure witness rejected at step " +
                                    std::to_string(r.failed_step) + ": " + r.reason);
      }
      if (r.final_form != expected) {
        return c.fail(expected, "closure witness final form mismatch");
      }
      if (w.step_count() != source_steps + n + 1) {
        return c.fail(expected, "closure witness step count not sum+n+1");
      }
    } while (advance(pick));
  }
  return c.pass();
}

// --- inverse theorems ---------------------------------------------------

TheoremReport run_uni_inv(Check& c) {
  const Grammar& g1 = g_of(c, 0);
  const Grammar& g2 = g_of(c, 1);
  const Grammar uni = c.constructed_override != nullptr
                          ? *c.constructed_override
                          : union_grammar(g1, g2);

  const FormIndex index(uni, start_form(uni), search_bounds(c.bounds));
  const FormIndex oracle1(g1, start_form(g1), oracle_bounds(c.bounds));
  const FormIndex oracle2(g2, start_form(g2), oracle_bounds(c.bounds));

  for (const RankedForm& rf : index.forms()) {
    if (!c.spend_case()) return c.case_budget_report();
    const UnionClassification cls = union_classify(g1, g2, rf.form);
    if (cls.kind == UnionClassification::Kind::StartForm) continue;
    if (cls.kind == UnionClassification::Kind::NotLifted) {
      return c.fail(rf.form, "generated form is not a lifted source form");
    }

    const bool from_first = cls.kind == UnionClassification::Kind::FromFirst;
    const std::size_t step_bound = rf.steps - 1;
    const auto verify = [&](const FormIndex& oracle, const Grammar& src)
        -> std::optional<std::string> {
      const auto steps = oracle.steps_of(cls.unlifted);
      if (!steps) return "source does not generate the unlifted form";
      if (*steps > step_bound) {
        return "source needs " + std::to_string(*steps) +
               " steps, bound is " + std::to_string(step_bound);
      }
      const Derivation witness = *oracle.derivation_of(cls.unlifted);
      const CheckResult r = check_derivation(src, witness);
      if (!r.accepted || r.final_form != cls.unlifted) {
        return "oracle witness does not check";
      }
      return std::nullopt;
    };

    auto err = from_first ? verify(oracle1, g1) : verify(oracle2, g2);
    if (err && rf.form.empty()) {
      // The empty form is the lift of the empty form from either side; the
      // theorem's disjunction accepts whichever source generates it.
      err = from_first ? verify(oracle2, g2) : verify(oracle1, g1);
    }
    if (err) {
      return c.fail(rf.form, (from_first ? "FromFirst: " : "FromSecond: ") + *err);
    }
  }
  return c.pass();
}

TheoremReport run_cat_inv(Check& c) {
  const Grammar& g1 = g_of(c, 0);
  const Grammar& g2 = g_of(c, 1);
  const Grammar cat = c.constructed_override != nullptr
                          ? *c.constructed_override
                          : concat_grammar(g1, g2);

  const FormIndex index(cat, start_form(cat), search_bounds(c.bounds));
  const CatDecomposer decomposer(g1, g2, oracle_bounds(c.bounds));

  for (const RankedForm& rf : index.forms()) {
    if (!c.spend_case()) return c.case_budget_report();
    const auto dec = decomposer.decompose(rf.form);
    if (!dec) {
      return c.fail(rf.form, "no concatenation decomposition within bounds");
    }

    const CheckResult r1 = check_derivation(g1, dec->first_witness);
    if (!r1.accepted || r1.final_form != dec->first) {
      return c.fail(rf.form, "first witness does not check");
    }
    const CheckResult r2 = check_derivation(g2, dec->second_witness);
    if (!r2.accepted || r2.final_form != dec->second) {
      return c.fail(rf.form, "second witness does not check");
    }

    if (rf.steps == 0) continue;  // the bare start form decomposes by fiat
    const SententialForm relift =
        concat_forms(lift_form(LiftSpec::cat_first(), dec->first),
                     lift_form(LiftSpec::cat_second(), dec->second));
    if (relift != rf.form) {
      return c.fail(rf.form, "decomposition does not re-lift to the form");
    }
    if (dec->first_witness.step_count() + dec->second_witness.step_count() >
        rf.steps - 1) {
      return c.fail(rf.form, "witness step counts exceed k-1");
    }
  }
  return c.pass();
}

TheoremReport run_clo_inv(Check& c) {
  const Grammar& g = g_of(c, 0);
  const Grammar clo_checked = kleene_grammar(g);
  const Grammar clo = c.constructed_override != nullptr
                          ? *c.constructed_override
                          : clo_checked;

  const FormIndex index(clo, start_form(clo), search_bounds(c.bounds));
  const CloDecomposer decomposer(g, oracle_bounds(c.bounds));

  for (const RankedForm& rf : index.forms()) {
    if (!c.spend_case()) return c.case_budget_report();
    const auto dec = decomposer.decompose(rf.form);
    if (!dec) {
      return c.fail(rf.form, "no closure decomposition within bounds");
    }
    switch (dec->kind) {
      case CloDecomposition::Kind::EmptyForm:
        if (!rf.form.empty()) {
          return c.fail(rf.form, "EmptyForm for a nonempty form");
        }
        break;
      case CloDecomposition::Kind::StartForm:
        if (rf.form != start_form(clo_checked)) {
          return c.fail(rf.form, "StartForm for a different form");
        }
        break;
      case CloDecomposition::Kind::Split: {
        const SententialForm relift = concat_forms(
            dec->prefix, lift_form(LiftSpec::clo(), dec->tail));
        if (relift != rf.form) {
          return c.fail(rf.form, "split does not reassemble the form");
        }
        const CheckResult rp = check_derivation(clo_checked, dec->prefix_witness);
        if (!rp.accepted || rp.final_form != dec->prefix) {
          return c.fail(rf.form, "prefix witness does not check");
        }
        const CheckResult rt = check_derivation(g, dec->tail_witness);
        if (!rt.accepted || rt.final_form != dec->tail) {
          return c.fail(rf.form, "tail witness does not check");
        }
        break;
      }
    }
  }
  return c.pass();
}

// --- lemmas --------------------------------------------------------------

TheoremReport run_trans(Check& c) {
  const Grammar& g = g_of(c, 0);
  const FormIndex index(g, start_form(g), search_bounds(c.bounds));

  for (const RankedForm& rf : index.forms()) {
    const Derivation d1 = *index.derivation_of(rf.form);
    const FormIndex onward(g, rf.form, search_bounds(c.bounds));
    for (const RankedForm& rf2 : onward.forms()) {
      if (!c.spend_case()) return c.case_budget_report();
      const Derivation d2 = *onward.derivation_of(rf2.form);
      const Derivation composed = compose_derivations(g, d1, d2);
      const CheckResult r = check_derivation(g, composed);
      if (!r.accepted || r.final_form != rf2.form) {
        return c.fail(rf2.form, "composed derivation does not check");
      }
      if (composed.step_count() != d1.step_count() + d2.step_count()) {
        return c.fail(rf2.form, "composed step count not additive");
      }
    }
  }
  return c.pass();
}

TheoremReport run_context_free_add(Check& c) {
  const Grammar& g = g_of(c, 0);
  const FormIndex index(g, start_form(g), search_bounds(c.bounds));

  std::vector<SententialForm> contexts{SententialForm{}};
  for (const RankedForm& rf : index.forms()) {
    if (contexts.size() >= c.bounds.max_contexts) break;
    if (!rf.form.empty()) contexts.push_back(rf.form);
  }

  for (const RankedForm& rf : index.forms()) {
    const Derivation d = *index.derivation_of(rf.form);
    for (const SententialForm& left : contexts) {
      for (const SententialForm& right : contexts) {
        if (!c.spend_case()) return c.case_budget_report();
        const Derivation embedded = embed_derivation(g, d, left, right);
        const SententialForm expected =
            concat_forms(concat_forms(left, rf.form), right);
        const CheckResult r = check_derivation(g, embedded);
        if (!r.accepted || r.final_form != expected) {
          return c.fail(expected, "embedded derivation does not check");
        }
        if (embedded.step_count() != d.step_count()) {
          return c.fail(expected, "embedding changed the step count");
        }
      }
    }
  }
  return c.pass();
}

TheoremReport dispatch(Check& c) {
  try {
    switch (c.id) {
      case TheoremId::UniCorrect: return run_uni_correct(c);
      case TheoremId::UniCorrectInv: return run_uni_inv(c);
      case TheoremId::CatCorrect: return run_cat_correct(c);
      case TheoremId::CatCorrectInv: return run_cat_inv(c);
      case TheoremId::CloCorrect: return run_clo_correct(c);
      case TheoremId::CloCorrectInv: return run_clo_inv(c);
      case TheoremId::DerivesTrans: return run_trans(c);
      case TheoremId::DerivesContextFreeAdd: return run_context_free_add(c);
    }
    throw InvalidInput("unknown theorem id");
  } catch (const BudgetExceeded& e) {
    return c.inconclusive(e.what());
  }
}

void require_arity(TheoremId id, std::size_t got) {
  const std::size_t want = theorem_is_binary(id) ? 2 : 1;
  if (got != want) {
    throw InvalidInput(std::string(theorem_name(id)) + " takes " +
                       std::to_string(want) + " grammar(s), got " +
                       std::to_string(got));
  }
}

void require_valid_inputs(const std::vector<CorpusEntry>& inputs) {
  for (const CorpusEntry& e : inputs) {
    const ValidationReport report = validate_grammar(e.grammar);
    if (!report.ok()) {
      throw InvalidInput("corpus grammar " + e.name + " is invalid: " +
                         report.violations.front());
    }
  }
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  return kTheoremNames[static_cast<std::size_t>(id)];
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  for (const TheoremId id : kAllTheorems) {
    if (theorem_name(id) == name) return id;
  }
  return std::nullopt;
}

bool theorem_is_binary(TheoremId id) {
  switch (id) {
    case TheoremId::UniCorrect:
    case TheoremId::UniCorrectInv:
    case TheoremId::CatCorrect:
    case TheoremId::CatCorrectInv:
      return true;
    default:
      return false;
  }
}

std::string CheckBounds::text() const {
  return "steps=" + std::to_string(max_steps) + ",len=" +
         std::to_string(max_len) + ",cap=" + std::to_string(form_cap) +
         ",segments=" + std::to_string(max_segments) + ",contexts=" +
         std::to_string(max_contexts) + ",cases=" + std::to_string(max_cases);
}

std::string TheoremReport::line() const {
  std::string out = std::string(theorem_name(id)) + " " + inputs + " " + bounds + " ";
  switch (outcome) {
    case Outcome::Pass:
      out += "PASS(" + std::to_string(cases_checked) + ")";
      break;
    case Outcome::Fail:
      out += "FAIL(" + detail + ")";
      break;
    case Outcome::Inconclusive:
      out += "INCONCLUSIVE(" + detail + ")";
      break;
  }
  return out;
}

Grammar random_grammar(const GenParams& p) {
  if (p.max_nonterminals == 0 || p.max_terminals == 0 || p.max_rules == 0 ||
      p.max_rhs_len == 0) {
    throw InvalidInput("generator counts must be >= 1");
  }
  if (p.epsilon_rule_probability < 0.0 || p.epsilon_rule_probability > 1.0) {
    throw InvalidInput("epsilon rule probability must be in [0, 1]");
  }

  std::mt19937_64 rng(p.seed);
  const auto pick = [&rng](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };
  const auto chance = [&rng](double prob) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < prob;
  };

  const std::size_t nt_count =
      1 + pick(std::min(p.max_nonterminals, p.max_rules));
  const std::size_t t_count = 1 + pick(p.max_terminals);

  std::vector<NtName> nts;
  for (std::size_t i = 0; i < nt_count; ++i) {
    nts.push_back(NtName::plain("N" + std::to_string(i)));
  }
  std::vector<TName> ts;
  for (std::size_t i = 0; i < t_count; ++i) {
    ts.push_back(TName::plain("t" + std::to_string(i)));
  }

  const std::size_t rule_count = nt_count + pick(p.max_rules - nt_count + 1);
  std::vector<std::pair<NtName, SententialForm>> rules;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < rule_count; ++i) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      const NtName lhs = i < nt_count ? nts[i] : nts[pick(nt_count)];
      SententialForm rhs;
      if (!chance(p.epsilon_rule_probability)) {
        const std::size_t len = 1 + pick(p.max_rhs_len);
        for (std::size_t s = 0; s < len; ++s) {
          const std::size_t which = pick(nt_count + t_count);
          rhs.push_back(which < nt_count
                            ? Symbol::nt(nts[which])
                            : Symbol::t(ts[which - nt_count]));
        }
      }
      if (seen.insert(lhs.text() + "->" + form_text(rhs)).second) {
        rules.emplace_back(lhs, std::move(rhs));
        break;
      }
    }
  }
  NtName start = nts.front();
  return make_grammar(std::move(start), std::move(nts), std::move(ts),
                      std::move(rules));
}

TheoremReport check_theorem(TheoremId id,
                            const std::vector<CorpusEntry>& inputs,
                            const CheckBounds& bounds) {
  require_arity(id, inputs.size());
  require_valid_inputs(inputs);
  Check c{id, inputs, nullptr, bounds, 0, {}};
  return dispatch(c);
}

TheoremReport replay_counterexample(const TheoremReport& failed,
                                    const CheckBounds& bounds) {
  if (!failed.counterexample) {
    throw InvalidInput("report carries no counterexample");
  }
  const Counterexample& cex = *failed.counterexample;
  require_arity(failed.id, cex.inputs.size());
  require_valid_inputs(cex.inputs);
  Check c{failed.id, cex.inputs, nullptr, bounds, 0, {}};
  if (cex.constructed) c.constructed_override = &*cex.constructed;
  return dispatch(c);
}

std::string_view mutant_name(MutantKind kind) {
  switch (kind) {
    case MutantKind::UnionMixedSides: return "union-mixed-sides";
    case MutantKind::CatSwappedSides: return "cat-swapped-sides";
    case MutantKind::CloTrailingStart: return "clo-trailing-start";
  }
  return "?";
}

Grammar mutant_construction(MutantKind kind,
                            const std::vector<CorpusEntry>& inputs) {
  const auto lifted_start = [](SideTag side, OpTag op, const Grammar& g) {
    return Symbol::nt(NtName::lifted(side, op, g.start));
  };
  switch (kind) {
    case MutantKind::UnionMixedSides: {
      if (inputs.size() != 2) throw InvalidInput("union mutant takes 2 grammars");
      Grammar m = union_grammar(inputs[0].grammar, inputs[1].grammar);
      m.rules.push_back(Rule{
          m.rules.size(), m.start,
          {lifted_start(SideTag::First, OpTag::Union, inputs[0].grammar),
           lifted_start(SideTag::Second, OpTag::Union, inputs[1].grammar)}});
      return m;
    }
    case MutantKind::CatSwappedSides: {
      if (inputs.size() != 2) throw InvalidInput("cat mutant takes 2 grammars");
      Grammar m = concat_grammar(inputs[0].grammar, inputs[1].grammar);
      m.rules.push_back(Rule{
          m.rules.size(), m.start,
          {lifted_start(SideTag::Second, OpTag::Cat, inputs[1].grammar),
           lifted_start(SideTag::First, OpTag::Cat, inputs[0].grammar)}});
      return m;
    }
    case MutantKind::CloTrailingStart: {
      if (inputs.size() != 1) throw InvalidInput("clo mutant takes 1 grammar");
      Grammar m = kleene_grammar(inputs[0].grammar);
      m.rules.push_back(Rule{
          m.rules.size(), m.start,
          {lifted_start(SideTag::First, OpTag::Clo, inputs[0].grammar),
           Symbol::nt(m.start)}});
      return m;
    }
  }
  throw InvalidInput("unknown mutant kind");
}

TheoremReport check_mutant(MutantKind kind,
                           const std::vector<CorpusEntry>& inputs,
                           const CheckBounds& bounds) {
  require_valid_inputs(inputs);
  const Grammar mutant = mutant_construction(kind, inputs);
  TheoremId id = TheoremId::CloCorrectInv;
  if (kind == MutantKind::UnionMixedSides) id = TheoremId::UniCorrectInv;
  if (kind == MutantKind::CatSwappedSides) id = TheoremId::CatCorrectInv;
  Check c{id, inputs, &mutant, bounds, 0, {}};
  c.mutant_label = std::string(mutant_name(kind));
  return dispatch(c);
}

bool SuiteSummary::all_passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const TheoremReport& r) {
    return r.outcome == TheoremReport::Outcome::Pass;
  });
}

std::size_t SuiteSummary::failed() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const TheoremReport& r) {
        return r.outcome == TheoremReport::Outcome::Fail;
      }));
}

std::size_t SuiteSummary::inconclusive() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const TheoremReport& r) {
        return r.outcome == TheoremReport::Outcome::Inconclusive;
      }));
}

std::string SuiteSummary::text() const {
  std::string out;
  for (const TheoremReport& r : reports) {
    out += r.line() + "\n";
  }
  out += "suite: " + std::to_string(reports.size()) + " reports, " +
         std::to_string(reports.size() - failed() - inconclusive()) +
         " pass, " + std::to_string(failed()) + " fail, " +
         std::to_string(inconclusive()) + " inconclusive\n";
  return out;
}

SuiteSummary run_suite(const SuiteConfig& config) {
  SuiteSummary summary;
  const auto& corpus = config.corpus;

  if (config.mutants) {
    for (const MutantKind kind : kAllMutants) {
      if (kind == MutantKind::CloTrailingStart) {
        for (const CorpusEntry& e : corpus) {
          summary.reports.push_back(check_mutant(kind, {e}, config.bounds));
        }
      } else {
        for (const CorpusEntry& a : corpus) {
          for (const CorpusEntry& b : corpus) {
            summary.reports.push_back(
                check_mutant(kind, {a, b}, config.bounds));
          }
        }
      }
    }
  } else {
    for (const TheoremId id : kAllTheorems) {
      if (theorem_is_binary(id)) {
        for (const CorpusEntry& a : corpus) {
          for (const CorpusEntry& b : corpus) {
            summary.reports.push_back(
                check_theorem(id, {a, b}, config.bounds));
          }
        }
      } else {
        for (const CorpusEntry& e : corpus) {
          summary.reports.push_back(check_theorem(id, {e}, config.bounds));
        }
      }
    }
  }

  std::stable_sort(summary.reports.begin(), summary.reports.end(),
                   [](const TheoremReport& a, const TheoremReport& b) {
                     if (a.id != b.id) return a.id < b.id;
                     return a.inputs < b.inputs;
                   });
  return summary;
}

std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed,
                                       const GenParams& base) {
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GenParams p = base;
    p.seed = seed + i;
    out.push_back(CorpusEntry{
        "random" + std::to_string(i) + "[mt19937_64:seed=" +
            std::to_string(p.seed) + "]",
        random_grammar(p)});
  }
  return out;
}

}  // namespace cfga
