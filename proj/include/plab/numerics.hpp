#pragma once

#include "plab/complex.hpp"
#include "plab/context.hpp"
#include "plab/real.hpp"

namespace plab {

// Exact Bernoulli number, B_1 = -1/2.  Memoized; safe to call concurrently.
Rational bernoulli(int n);
// zeta(1 - n) for n >= 1 as an exact rational.
Rational zeta_neg_int(int n);

Real digamma(const Real& x, const EvalContext& ctx);
Complex digamma(const Complex& z, const EvalContext& ctx);

Real polygamma(int m, const Real& x, const EvalContext& ctx);
Complex polygamma(int m, const Complex& z, const EvalContext& ctx);

Real riemann_zeta(const Real& s, const EvalContext& ctx);
Complex riemann_zeta(const Complex& s, const EvalContext& ctx);

Real hurwitz_zeta(const Real& s, const Real& a, const EvalContext& ctx);
Complex hurwitz_zeta(const Complex& s, const Complex& a, const EvalContext& ctx);
// Derivative in s of the Hurwitz zeta function, real arguments.
Real hurwitz_zeta_deriv(const Real& s, const Real& a, const EvalContext& ctx);

Real divisor_sigma(const Real& s, long n, const EvalContext& ctx);
Complex divisor_sigma(const Complex& s, long n, const EvalContext& ctx);
long divisor_count(long n);

Complex log_gamma(const Complex& z, const EvalContext& ctx);
Complex gamma(const Complex& z, const EvalContext& ctx);

}  // namespace plab
