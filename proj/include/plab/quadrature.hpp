#pragma once

// Double-exponential quadrature.  exp_sinh covers (0, inf) through
// t = scale * exp(pi/2 sinh u); tanh_sinh covers a finite interval.  Both
// halve the step until two successive levels agree.

#include <string>

#include "plab/complex.hpp"
#include "plab/context.hpp"
#include "plab/detail/special.hpp"
#include "plab/errors.hpp"

namespace plab::quad {

struct Options {
  int max_level;
  Real converged;  // relative level-to-level change that stops refinement
  Real accept;     // looser bound accepted when max_level is reached
};

inline Options options_for(const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  return Options{ctx.quad_level(),
                 pow(Real(10), -static_cast<long>(ctx.working_digits() - ctx.guard_digits() / 2)),
                 pow(Real(10), -static_cast<long>(ctx.precision_digits()))};
}

namespace detail {

inline constexpr double kMaxU = 6.5;

// Sums node(u) * h over u = j*h, j = first, first + stride, ... in both
// directions, stopping each direction once two consecutive contributions are
// negligible against `ref`.
template <class T, class Node>
T sweep(const Node& node, const Real& h, long first, long stride, const T& ref, bool include_zero) {
  T sum{};
  if (include_zero) sum += node(Real(0));
  for (int dir : {1, -1}) {
    int quiet = 0;
    for (long j = first;; j += stride) {
      Real u = h * (dir * j);
      if (abs(u) > kMaxU) break;
      T term = node(u);
      sum += term;
      const T& scale = plab::detail::mag(ref) == LONG_MIN ? sum : ref;
      if (plab::detail::negligible(term, scale)) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
    }
  }
  return sum * h;
}

template <class T, class Node>
T refine(const Node& node, const Options& o, const char* what) {
  Real h(1);
  T estimate = sweep<T>(node, h, 1, 1, T{}, true);
  Real last_diff;
  for (int level = 1; level <= o.max_level; ++level) {
    h /= 2;
    T odd = sweep<T>(node, h, 1, 2, estimate, false);
    T next = estimate / 2 + odd;
    Real diff = abs(next - estimate);
    Real scale = abs(next);
    estimate = std::move(next);
    last_diff = diff;
    if (level >= 3 && diff <= o.converged * scale) return estimate;
  }
  if (last_diff <= o.accept * abs(estimate)) return estimate;
  throw ConvergenceError(std::string(what) + ": quadrature did not converge (change " +
                         to_sci(last_diff) + " at the last level)");
}

}  // namespace detail

// Integral of f over (0, inf).  `scale` should be near the width of the bulk.
template <class T, class F>
T exp_sinh(const F& f, const Options& o, const char* what, const Real& scale = Real(1)) {
  const Real half_pi = const_pi() / 2;
  auto node = [&](const Real& u) -> T {
    Real t = scale * exp(half_pi * sinh(u));
    if (t.is_zero() || !t.is_finite()) return T{};
    T v = f(t);
    return v * (t * half_pi * cosh(u));
  };
  return detail::refine<T>(node, o, what);
}

// Integral of f over [a, b].
template <class T, class F>
T tanh_sinh(const F& f, const Real& a, const Real& b, const Options& o, const char* what) {
  const Real half_pi = const_pi() / 2;
  const Real c = (a + b) / 2;
  const Real r = (b - a) / 2;
  auto node = [&](const Real& u) -> T {
    Real v = half_pi * sinh(u);
    Real ch = cosh(v);
    // Distance to the nearer endpoint, computed without cancellation.
    Real off = r * (Real(2) / (exp(2 * abs(v)) + 1));
    Real x = v.sign() >= 0 ? b - off : a + off;
    if (off.is_zero()) return T{};
    T fx = f(x);
    return fx * (r * half_pi * cosh(u) / sqr(ch));
  };
  return detail::refine<T>(node, o, what);
}

}  // namespace plab::quad
