#pragma once

#include "plab/complex.hpp"
#include "plab/context.hpp"

namespace plab {

// J1(x) = integral_0^inf dt / ((1 + e^-t)(1 + e^(xt))), Re(x) > 0.
Complex J1(const Complex& x, const EvalContext& ctx);
Real J1(const Real& x, const EvalContext& ctx);

// J1(x) + log 2
Complex calJ1(const Complex& x, const EvalContext& ctx);
Real calJ1(const Real& x, const EvalContext& ctx);

// 3 F1(x) - 2 F1(2x) - F1(x/2) + ((1+x)/(2x)) log 2
Real calJ1_via_F1(const Real& x, const EvalContext& ctx);

// Closed form at x = n (inverted = false) or x = 1/n (inverted = true) as a
// finite sum of complex logarithms.  For odd n the singular term
// j = (n+1)/2 is dropped and 1/2 is added to the whole expression.
Real calJ1_closed(long n, bool inverted, const EvalContext& ctx);

// calJ1(u) at u = n + sqrt(n^2 - 1), n even, through the P_tilde combination.
Real unit_eval(long n, const EvalContext& ctx);

// J(x) = integral_0^inf log(1 + e^(-xt)) / (1 + e^t) dt, Re(x) > 0.
Complex J_RZ(const Complex& x, const EvalContext& ctx);
Real J_RZ(const Real& x, const EvalContext& ctx);
// frak_F2(2x) - 2 frak_F2(x) + frak_F2(x/2) + pi^2/(12x)
Real J_RZ_via_F2(const Real& x, const EvalContext& ctx);

}  // namespace plab
