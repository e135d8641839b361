#include "cfga/derivation.hpp"

#include "cfga/errors.hpp"

namespace cfga {

CheckResult check_derivation(const Grammar& g, const Derivation& d) {
  SententialForm form = d.start;
  SententialForm next;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step& step = d.steps[i];
    if (const char* reason =
            detail::try_apply_rule(g, form, step.pos, step.rule, &next)) {
      return CheckResult::reject(i, reason);
    }
    form.swap(next);
  }
  return CheckResult::accept(std::move(form));
}

Derivation compose_derivations(const Grammar& g, const Derivation& d1,
                               const Derivation& d2) {
  const CheckResult r1 = check_derivation(g, d1);
  if (!r1.accepted) {
    throw InvalidInput("first certificate rejected at step " +
                       std::to_string(r1.failed_step) + ": " + r1.reason);
  }
  const CheckResult r2 = check_derivation(g, d2);
  if (!r2.accepted) {
    throw InvalidInput("second certificate rejected at step " +
                       std::to_string(r2.failed_step) + ": " + r2.reason);
  }
  if (r1.final_form != d2.start) {
    throw FormMismatch("cannot compose: first ends at [" +
                       form_text(r1.final_form) + "], second starts at [" +
                       form_text(d2.start) + "]");
  }
  Derivation out{d1.start, d1.steps};
  out.steps.insert(out.steps.end(), d2.steps.begin(), d2.steps.end());
  return out;
}

Derivation embed_derivation(const Grammar& g, const Derivation& d,
                            const SententialForm& left,
                            const SententialForm& right) {
  const CheckResult r = check_derivation(g, d);
  if (!r.accepted) {
    throw InvalidInput("certificate rejected at step " +
                       std::to_string(r.failed_step) + ": " + r.reason);
  }
  Derivation out;
  out.start = concat_forms(concat_forms(left, d.start), right);
  out.steps.reserve(d.steps.size());
  for (const Step& step : d.steps) {
    out.steps.push_back(Step{step.pos + left.size(), step.rule});
  }
  return out;
}

}  // namespace cfga
