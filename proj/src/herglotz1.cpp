#include "plab/herglotz1.hpp"

#include <string>

#include "plab/errors.hpp"
#include "plab/kronecker.hpp"
#include "plab/periodfn.hpp"
#include "plab/quadrature.hpp"

namespace plab {

namespace {

void require_right(const Complex& x, const char* what) {
  if (!(x.re > 0)) throw DomainError(std::string(what) + ": needs Re(x) > 0");
}

Real bulk_scale(const Complex& x) { return Real(1) / abs(x); }

template <class T>
T J1_impl(const T& x, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  auto f = [&](const Real& t) {
    // 1/(1 + e^(xt)) = e^(-xt) / (1 + e^(-xt))
    T e = exp(-(x * t));
    return e / ((Real(1) + e) * (Real(1) + exp(-t)));
  };
  return ensure_finite(quad::exp_sinh<T>(f, quad::options_for(ctx), "J1", bulk_scale(Complex(x))), "J1");
}

template <class T>
T J_RZ_impl(const T& x, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  auto f = [&](const Real& t) {
    T e = exp(-(x * t));
    Real et = exp(-t);
    return log(Real(1) + e) * (et / (Real(1) + et));
  };
  return ensure_finite(quad::exp_sinh<T>(f, quad::options_for(ctx), "J", bulk_scale(Complex(x))), "J");
}

}  // namespace

Complex J1(const Complex& x, const EvalContext& ctx) {
  require_right(x, "J1");
  return J1_impl(x, ctx);
}

Real J1(const Real& x, const EvalContext& ctx) {
  require_right(Complex(x), "J1");
  return J1_impl(x, ctx);
}

Complex calJ1(const Complex& x, const EvalContext& ctx) {
  Complex j = J1(x, ctx);
  PrecisionScope scope(ctx);
  return j + const_log2();
}

Real calJ1(const Real& x, const EvalContext& ctx) {
  Real j = J1(x, ctx);
  PrecisionScope scope(ctx);
  return j + const_log2();
}

Real calJ1_via_F1(const Real& x, const EvalContext& ctx) {
  if (!(x > 0)) throw DomainError("calJ1_via_F1: needs x > 0");
  Real a = F1(x, ctx);
  Real b, c;
  {
    PrecisionScope scope(ctx);
    b = x * 2;
    c = x / 2;
  }
  b = F1(b, ctx);
  c = F1(c, ctx);
  PrecisionScope scope(ctx);
  return 3 * a - 2 * b - c + (1 + x) / (2 * x) * const_log2();
}

Real calJ1_closed(long n, bool inverted, const EvalContext& ctx) {
  if (n < 1) throw DomainError("calJ1_closed: n must be >= 1");
  PrecisionScope scope(ctx);
  const Real pi = const_pi();
  // Terms j and n+1-j are conjugate; sum j <= n/2 and double the real part.
  Real sum;
  for (long j = 1; 2 * j <= n; ++j) {
    Complex e = exp(mul_i(Complex(pi * (2 * j - 1) / n)));
    Complex term = log((Real(1) - e) / 2) / (Real(1) + e);
    sum += 2 * term.re;
  }
  Real v = const_log2() - sum;
  if (n % 2 != 0) v += Real(1) / 2;
  return inverted ? v : Real(v / n);
}

Real unit_eval(long n, const EvalContext& ctx) {
  if (n < 2 || n % 2 != 0) throw DomainError("unit_eval: n must be even and >= 2");
  Real u, a1, b1, a2, b2;
  {
    PrecisionScope scope(ctx);
    u = Real(n) + sqrt(Real(n * n - 1));
    a1 = (u + 1) / 2;
    b1 = (u + 1) / (2 * u);
    a2 = 2 * u / (u + 1);
    b2 = Real(2) / (u + 1);
  }
  Real p0 = P_tilde(u, Real(Real(1) / u), ctx);
  Real p1 = P_tilde(a1, b1, ctx);
  Real p2 = P_tilde(a2, b2, ctx);
  PrecisionScope scope(ctx);
  Real C = p0 - 2 * p1 - 2 * p2;
  return C / (u - 1) - 2 * const_euler() / (u + 1) + (sqr(u) + 1) / (u * (u + 1)) * const_log2() -
         2 / (u + 1) * log((u - 1) / (u + 1));
}

Complex J_RZ(const Complex& x, const EvalContext& ctx) {
  require_right(x, "J");
  return J_RZ_impl(x, ctx);
}

Real J_RZ(const Real& x, const EvalContext& ctx) {
  require_right(Complex(x), "J");
  return J_RZ_impl(x, ctx);
}

Real J_RZ_via_F2(const Real& x, const EvalContext& ctx) {
  if (!(x > 0)) throw DomainError("J_RZ_via_F2: needs x > 0");
  Real b, c;
  {
    PrecisionScope scope(ctx);
    b = x * 2;
    c = x / 2;
  }
  Real fa = frak_Fk(2, x, ctx);
  Real fb = frak_Fk(2, b, ctx);
  Real fc = frak_Fk(2, c, ctx);
  PrecisionScope scope(ctx);
  return fb - 2 * fa + fc + sqr(const_pi()) / (12 * x);
}

}  // namespace plab
