#pragma once

#include <cstdint>

namespace plab {

enum class Exec { serial, parallel };

// Precision and truncation settings shared by every evaluation.  Immutable;
// use the with_* helpers to derive a modified copy.
class EvalContext {
 public:
  explicit EvalContext(int precision_digits = 30, int guard_digits = 15,
                       long max_terms = 1000000, int quad_level = 10,
                       std::uint64_t seed = 42, Exec exec = Exec::parallel);

  int precision_digits() const { return precision_; }
  int guard_digits() const { return guard_; }
  long max_terms() const { return max_terms_; }
  int quad_level() const { return quad_level_; }
  std::uint64_t seed() const { return seed_; }
  Exec exec() const { return exec_; }

  int working_digits() const { return precision_ + guard_; }
  long working_bits() const;
  // |a| past which asymptotic Bernoulli expansions are used directly.
  double asymptotic_threshold() const;

  EvalContext with_precision(int digits) const;
  EvalContext with_seed(std::uint64_t seed) const;
  EvalContext with_exec(Exec exec) const;

 private:
  int precision_;
  int guard_;
  long max_terms_;
  int quad_level_;
  std::uint64_t seed_;
  Exec exec_;
};

}  // namespace plab
