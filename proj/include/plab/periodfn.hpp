#pragma once

#include <string_view>

#include "plab/complex.hpp"
#include "plab/context.hpp"

namespace plab {

enum class EvalMethod { series, integral, asymptotic };

EvalMethod parse_method(std::string_view name);
const char* method_name(EvalMethod m);

// sum_n { psi(nx) + 1/(2nx) - log(nx) }, x off (-inf, 0].
Complex frak_F1(const Complex& x, const EvalContext& ctx);
Real frak_F1(const Real& x, const EvalContext& ctx);

// F1(x) = frak_F1(x) - (gamma - log(2 pi / x)) / 2.
Complex F1(const Complex& x, const EvalContext& ctx, EvalMethod method = EvalMethod::series);
Real F1(const Real& x, const EvalContext& ctx);

// Integral route, Re(x) > 0.  Returns F1, not frak_F1.
Complex F1_integral(const Complex& x, const EvalContext& ctx);

struct Asymptotic {
  Complex value;
  Real bound;  // magnitude of the first omitted nonzero term
};

// Large-x expansion with `terms` coefficients n = 2..terms+1 for |x| >= 2,
// and its image under F1(x) = F1(1/x)/x for |x| <= 1/2.
Asymptotic F1_asymptotic(const Complex& x, int terms, const EvalContext& ctx);

// k >= 3: sum n^(1-k) psi(nx); k = 2: sum (psi(nx) - log nx)/n; k = 1: frak_F1.
Complex frak_Fk(int k, const Complex& x, const EvalContext& ctx);
Real frak_Fk(int k, const Real& x, const EvalContext& ctx);

// i-th derivative of frak_Fk for k >= 3, 0 <= i <= k - 1, x > 0.
Real Fk_derivative(int k, int i, const Real& x, const EvalContext& ctx);

}  // namespace plab
