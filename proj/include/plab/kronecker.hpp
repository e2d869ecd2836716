#pragma once

#include <string>
#include <vector>

#include "plab/complex.hpp"
#include "plab/context.hpp"
#include "plab/quadfield.hpp"

namespace plab {

// A narrow ideal class given by its cycle; `reduced` lists the reduced numbers
// w_1..w_r in rotation order.
struct NarrowClassData {
  std::string name;
  Integer d;
  Cycle cycle;
  std::vector<QuadIrr> reduced;

  NarrowClassData(std::string name, Integer d, Cycle cycle);
};

// The two narrow classes of Q(sqrt 3): cycles ((4)) and ((2,3)).
std::vector<NarrowClassData> sqrt3_classes();

// integral_0^inf (x-y)^s / ((x+t)(y+t))^s dt by double-exponential quadrature.
Complex I_s(const Complex& s, const Real& x, const Real& y, const EvalContext& ctx);
// Same integral through its binomial series in ((x-y)/(x+y))^2.
Complex I_s_series(const Complex& s, const Real& x, const Real& y, const EvalContext& ctx);

// sum_{p>=1, q>=0} (p(w-w') / ((q+pw)(q+pw')))^k
Real Z_direct(int k, const QuadIrr& w, const EvalContext& ctx);

struct OracleValue {
  Real value;
  Real bound;  // estimate of the truncation error
};

// Brute-force double sum over p <= P, q <= Q in extended double precision
// with integral estimates for both tails.
OracleValue Z_raw_oracle(int k, const QuadIrr& w, long P, long Q, const EvalContext& ctx);

// Continuation of Z to Re(s) > 1/2, poles at s = 1 and s = 2.
Complex Z_continued(const Complex& s, const QuadIrr& w, const EvalContext& ctx);

// Constant term of Z at s = 1: F1(x) - F1(y) - ((x-y)/(2xy))(gamma + log((x-y)/(xy))).
Real P_tilde(const Real& x, const Real& y, const EvalContext& ctx);
// The constant term the continuation actually has: F1(x) - F1(y) + ((x-y)/(2xy))(gamma + log((x-y)/(xy))).
// It differs from P_tilde only in the sign of the last term.
Real laurent_constant(const Real& x, const Real& y, const EvalContext& ctx);

struct Laurent {
  Real residue;
  Real constant;
};
// Two-sided extraction from Z_continued at s = 1 +- h.
Laurent laurent_at_one(const QuadIrr& w, const Real& h, const EvalContext& ctx);

// sum_{i=0}^n C(2n-i, n) (F^(i)(x) - (-1)^i F^(i)(y)) / (i! (y-x)^(n-i))
Real D_op(int n, const std::vector<Real>& derivs_x, const std::vector<Real>& derivs_y, const Real& x,
          const Real& y, const EvalContext& ctx);

// sum over Red(B) of (D_{k-1} frak_Fk)(w, w')
Real higher_klf_rhs(int k, const NarrowClassData& cls, const EvalContext& ctx);
// sum over Red(B) of Z_direct(k, w)
Real partial_zeta(int k, const NarrowClassData& cls, const EvalContext& ctx);

}  // namespace plab
