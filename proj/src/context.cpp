#include "plab/context.hpp"

#include <algorithm>
#include <string>

#include "plab/errors.hpp"
#include "plab/real.hpp"

namespace plab {

EvalContext::EvalContext(int precision_digits, int guard_digits, long max_terms, int quad_level,
                         std::uint64_t seed, Exec exec)
    : precision_(precision_digits),
      guard_(guard_digits),
      max_terms_(max_terms),
      quad_level_(quad_level),
      seed_(seed),
      exec_(exec) {
  if (precision_ < 15) throw DomainError("precision_digits must be >= 15, got " + std::to_string(precision_));
  if (guard_ < 5) throw DomainError("guard_digits must be >= 5, got " + std::to_string(guard_));
  if (max_terms_ < 1000) throw DomainError("max_terms must be >= 1000");
  if (quad_level_ < 4 || quad_level_ > 20) throw DomainError("quad_level must lie in [4, 20]");
}

long EvalContext::working_bits() const { return digits_to_bits(working_digits()); }

double EvalContext::asymptotic_threshold() const {
  return std::max(0.9 * precision_, 0.45 * working_digits());
}

EvalContext EvalContext::with_precision(int digits) const {
  return EvalContext(digits, guard_, max_terms_, quad_level_, seed_, exec_);
}

EvalContext EvalContext::with_seed(std::uint64_t seed) const {
  return EvalContext(precision_, guard_, max_terms_, quad_level_, seed, exec_);
}

EvalContext EvalContext::with_exec(Exec exec) const {
  return EvalContext(precision_, guard_, max_terms_, quad_level_, seed_, exec);
}

}  // namespace plab
