#pragma once

#include "plab/complex.hpp"
#include "plab/context.hpp"

namespace plab {

// Number of q-powers kept for a series with coefficients growing like n^growth.
long q_truncation(const Complex& tau, double growth, const EvalContext& ctx);

// 1 - 4 sum d(n) q^n, q = exp(2 pi i tau).
Complex E1_q(const Complex& tau, const EvalContext& ctx);
// |F1(-tau) - F1(tau) - (pi i / 2) E1(tau)|
Real prop51_residual(const Complex& tau, const EvalContext& ctx);

// Cotangent-sum closed form of F1(N), or of F1(1/N) when inverted.
Real kurokawa_F1(long N, bool inverted, const EvalContext& ctx);

// -(tau / (pi i)) F1(tau)
Complex R1(const Complex& tau, const EvalContext& ctx);
// -(E1(-1/tau) - tau E1(tau)) / 4
Complex R1_eisenstein(const Complex& tau, const EvalContext& ctx);

// Generalized period function psi_s^+(x), continued in s; s = 1/2 gives -F1(x).
Complex psi_plus(const Complex& s, const Complex& x, const EvalContext& ctx);
Real psi_plus(const Real& s, const Real& x, const EvalContext& ctx);

// Integral representation, s > 1 and Re(x) > 0.
Complex psi_plus_integral(const Real& s, const Complex& x, const EvalContext& ctx);

struct GrowthCheck {
  Real residual;
  Real bound;  // twice the next term of the expansion
  bool pass() const { return residual <= bound; }
};

// Three-term growth expansion for x >= 50 or x <= 1/50.  The third
// coefficient is 2s zeta(2s+1)/12 by default; printed_form uses
// Gamma(2s+1)/12 instead.
GrowthCheck psi_growth_residual(const Real& s, const Real& x, const EvalContext& ctx,
                                bool printed_form = false);

// |psi(x) - psi(x+1) - (x+1)^(-2s) psi(x/(x+1))|
Real psi_three_term_residual(const Real& s, const Real& x, const EvalContext& ctx);

// 1 + (2/zeta(1-2s)) sum sigma_{2s-1}(n) q^n.  At s = 1/2 this is E1.
Complex E2s_q(const Complex& s, const Complex& tau, const EvalContext& ctx);

// psi(tau) + tau^(-2s) psi(-1/tau)
Complex f_s(const Complex& s, const Complex& tau, const EvalContext& ctx);
// (1 + e^(-2 pi i s)) zeta(2s) / 2, the constant term of f_s.
Complex f_s_constant(const Complex& s, const EvalContext& ctx);

// Psi_s(tau) = E2s(tau) - tau^(-2s) E2s(-1/tau)
Complex Psi_s(const Complex& s, const Complex& tau, const EvalContext& ctx);
// |Psi_s(tau) - 2(1 - e^(-2 pi i s)) / ((1 + e^(-2 pi i s)) zeta(2s)) psi(tau)|
Real prop63_residual(const Complex& s, const Complex& tau, const EvalContext& ctx);

}  // namespace plab
