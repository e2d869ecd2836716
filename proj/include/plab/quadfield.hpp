#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plab/context.hpp"
#include "plab/real.hpp"

namespace plab {

// r + t sqrt(d) with rational r, t != 0 and d a positive non-square integer.
class QuadIrr {
 public:
  QuadIrr(Rational r, Rational t, Integer d);

  const Rational& r() const { return r_; }
  const Rational& t() const { return t_; }
  const Integer& d() const { return d_; }

  // N(w) = r^2 - t^2 d and Tr(w) = 2r.
  Rational norm() const { return r_ * r_ - t_ * t_ * d_; }
  Rational trace() const { return 2 * r_; }

  Real value() const;  // at the calling thread's working precision
  std::string to_string() const;

  friend bool operator==(const QuadIrr& a, const QuadIrr& b);

 private:
  Rational r_, t_;
  Integer d_;
};

// Exact sign of r + t sqrt(d), where t may be zero.
int sign_of(const Rational& r, const Rational& t, const Integer& d);

QuadIrr conjugate(const QuadIrr& w);
// w > 1 > w' > 0
bool is_reduced(const QuadIrr& w);
// Smallest integer >= w.
Integer ceil_exact(const QuadIrr& w);
// One step of the negative continued fraction: (ceil w, 1/(ceil w - w)).
std::pair<Integer, QuadIrr> neg_cf_step(const QuadIrr& w);

using Cycle = std::vector<long>;

// Period of the negative continued fraction of a reduced w.
Cycle neg_cf_expand(const QuadIrr& w, long max_period = 10000);

// The reduced numbers attached to the rotations of a cycle, in rotation order.
std::vector<QuadIrr> cycle_to_reduced(const Cycle& c, const Integer& d);

// (q + p w)(q + p w') / (w - w')
Real Qk_form(const QuadIrr& w, long p, long q, const EvalContext& ctx);

// "a+b*sqrt(d)" with rational a and b ("p/q" allowed); also "b*sqrt(d)",
// "sqrt(d)", "a-sqrt(d)" and whitespace.
QuadIrr parse_quad(std::string_view text);
// Comma-separated entries, cycles separated by semicolons: "4;2,3".
std::vector<Cycle> parse_cycles(std::string_view text);
std::string cycle_to_string(const Cycle& c);

}  // namespace plab
