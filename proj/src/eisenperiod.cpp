#include "plab/eisenperiod.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "plab/detail/special.hpp"
#include "plab/errors.hpp"
#include "plab/numerics.hpp"
#include "plab/parallel.hpp"
#include "plab/periodfn.hpp"
#include "plab/quadrature.hpp"

namespace plab {

namespace {

using detail::negligible;

constexpr int kMaxShiftDepth = 60;

void require_upper(const Complex& tau, const char* what) {
  if (tau.im.sign() <= 0) throw DomainError(std::string(what) + ": tau must lie in the upper half-plane");
}

// exp(2 pi i tau)
Complex nome(const Complex& tau) { return expi(2 * const_pi() * tau.re) * exp(-2 * const_pi() * tau.im); }

Complex cpow(const Complex& b, const Complex& e) { return exp(e * log(b)); }
Real cpow(const Real& b, const Real& e) { return pow(b, e); }

// sum_{n=1}^{T} c[n] q^n by Horner.
Complex q_sum(const std::vector<Complex>& c, const Complex& q) {
  Complex acc;
  for (size_t n = c.size() - 1; n >= 1; --n) acc = (acc + c[n]) * q;
  return acc;
}

bool is_half(const Complex& s) { return s.is_real() && s.re == 0.5; }
bool is_half(const Real& s) { return s == 0.5; }

class TailGuard {
 public:
  void check(long m, int k) {
    if (k > 400 || (k > 3 && m != LONG_MIN && m > last_ + 2)) {
      throw ConvergenceError("psi_plus: tail expansion stopped converging");
    }
    last_ = m;
  }

 private:
  long last_ = LONG_MAX;
};

// Series for Re(x) > 0:
//   sum_n R(2s, nx) + zeta(2s)/2 + x^(1-2s) zeta(2s-1)/(2s-1),
// R(s, a) = zeta(s, a) - a^(1-s)/(s-1) - a^(-s)/2.  Past the head the
// remainders are summed through their Bernoulli expansion in 1/(nx).
template <class T>
T psi_right(const T& s, const T& x, const EvalContext& ctx) {
  const double thr = ctx.asymptotic_threshold();
  const T s2 = s * 2;
  double n = std::max(50.0, std::ceil((thr + abs(s2).to_double() / M_PI) / abs(x).to_double()));
  if (!(n <= static_cast<double>(ctx.max_terms()))) {
    throw ConvergenceError("psi_plus: needs more than max_terms series terms");
  }
  const long N = static_cast<long>(n);
  // At s = 1/2 the remainder becomes log a - psi(a) - 1/(2a).
  const bool half = is_half(s);
  T head = sum_terms<T>(
      1, N + 1,
      [&](long k) {
        return half ? T(-detail::digamma_remainder(T(x * k), thr)) : detail::hurwitz_remainder(s2, T(x * k), thr);
      },
      ctx.exec());

  // sum_{n>N} R(2s, nx) = sum_k B_2k/(2k)! (2s)_{2k-1} x^(1-2s-2k) zeta(2s+2k-1, N+1)
  const T xinv = Real(1) / x;
  const T x2inv = sqr(xinv);
  T p = cpow(x, T(-s2)) * xinv;
  T poch = s2;
  const T a = T(Real(N + 1));
  T tail{};
  TailGuard guard;
  for (int k = 1;; ++k) {
    T term = p * poch * detail::bernoulli_over_factorial(k) *
             detail::hurwitz_zeta(T(s2 + (2 * k - 1)), a, thr);
    tail += term;
    if (negligible(term, head) || negligible(term, tail)) break;
    guard.check(detail::mag(term), k);
    poch *= (s2 + (2 * k - 1)) * (s2 + 2 * k);
    p *= x2inv;
  }
  // The poles of zeta(2s)/2 and zeta(2s-1)/(2s-1) at s = 1/2 cancel.
  T constant = half ? T((const_euler() - log(T(2 * const_pi() / x))) / 2)
                    : T(detail::riemann_zeta(s2, thr) / 2 +
                        cpow(x, T(1 - s2)) * detail::riemann_zeta(T(s2 - 1), thr) / (s2 - 1));
  return head + tail + constant;
}

// psi(x) = psi(x+1) + (x+1)^(-2s) psi(x/(x+1)) carries left-half-plane
// points back to Re(x) > 0.
Complex psi_any(const Complex& s, const Complex& x, const EvalContext& ctx, int depth) {
  if (x.re.sign() > 0) return psi_right(s, x, ctx);
  if (depth > kMaxShiftDepth) throw ConvergenceError("psi_plus: three-term continuation did not reach Re(x) > 0");
  Complex x1 = x + 1;
  return psi_any(s, x1, ctx, depth + 1) + cpow(x1, Complex(-(s * 2))) * psi_any(s, x / x1, ctx, depth + 1);
}

// 1/(e^t - 1) + 1/2 + c, stable for small t.
Real outer(const Real& t) { return Real(1) / expm1(t) + Real(0.5); }

}  // namespace

long q_truncation(const Complex& tau, double growth, const EvalContext& ctx) {
  require_upper(tau, "q_truncation");
  const double y = tau.im.to_double();
  const double target = ctx.working_digits() * std::log(10.0);
  double n = std::ceil(target / (2 * M_PI * y));
  for (int it = 0; it < 20 && growth > 0; ++it) {
    n = std::ceil((target + growth * std::log(n + 1)) / (2 * M_PI * y));
  }
  n = std::max(n, 1.0);
  if (!(n <= static_cast<double>(ctx.max_terms()))) {
    throw ConvergenceError("q-series: Im(tau) too small for max_terms");
  }
  return static_cast<long>(n);
}

Complex E1_q(const Complex& tau, const EvalContext& ctx) {
  require_upper(tau, "E1_q");
  const long T = q_truncation(tau, 1.0, ctx);
  PrecisionScope scope(ctx);
  std::vector<long> d(static_cast<size_t>(T + 1), 0);
  for (long i = 1; i <= T; ++i)
    for (long m = i; m <= T; m += i) ++d[static_cast<size_t>(m)];
  std::vector<Complex> c(static_cast<size_t>(T + 1));
  for (long i = 1; i <= T; ++i) c[static_cast<size_t>(i)] = Complex(Real(d[static_cast<size_t>(i)]));
  return ensure_finite(Complex(Real(1)) - q_sum(c, nome(tau)) * 4, "E1_q");
}

Real prop51_residual(const Complex& tau, const EvalContext& ctx) {
  require_upper(tau, "prop51_residual");
  Complex a = F1(-tau, ctx);
  Complex b = F1(tau, ctx);
  Complex e = E1_q(tau, ctx);
  PrecisionScope scope(ctx);
  return abs(a - b - mul_i(e) * (const_pi() / 2));
}

Real kurokawa_F1(long N, bool inverted, const EvalContext& ctx) {
  if (N < 1) throw DomainError("kurokawa_F1: N must be >= 1");
  PrecisionScope scope(ctx);
  const Real pi = const_pi();
  Real sum;
  for (long k = 1; 2 * k <= N; ++k) {
    if (2 * k == N) continue;  // weight N - 2k vanishes
    sum += cot(pi * k / N) * (N - 2 * k);
  }
  Real braces = Real(1) / pi - sum / N;
  return inverted ? pi / 2 * braces : pi / (2 * N) * braces;
}

Complex R1(const Complex& tau, const EvalContext& ctx) {
  require_upper(tau, "R1");
  Complex f = F1(tau, ctx);
  PrecisionScope scope(ctx);
  return -(tau / mul_i(Complex(const_pi()))) * f;
}

Complex R1_eisenstein(const Complex& tau, const EvalContext& ctx) {
  require_upper(tau, "R1_eisenstein");
  Complex a = E1_q(-(Real(1) / tau), ctx);
  Complex b = E1_q(tau, ctx);
  PrecisionScope scope(ctx);
  return -(a - tau * b) / 4;
}

Complex psi_plus(const Complex& s, const Complex& x, const EvalContext& ctx) {
  if (x.is_real() && x.re.sign() <= 0) throw DomainError("psi_plus: x lies on the cut (-inf, 0]");
  if (s.is_real() && s.re == 1) throw PoleError("psi_plus: pole at s = 1");
  PrecisionScope scope(ctx);
  return ensure_finite(psi_any(s, x, ctx, 0), "psi_plus");
}

Real psi_plus(const Real& s, const Real& x, const EvalContext& ctx) {
  if (x.sign() <= 0) throw DomainError("psi_plus: x must be positive");
  if (s == 1) throw PoleError("psi_plus: pole at s = 1");
  PrecisionScope scope(ctx);
  return ensure_finite(psi_right(s, x, ctx), "psi_plus");
}

Complex psi_plus_integral(const Real& s, const Complex& x, const EvalContext& ctx) {
  if (!(s > 1)) throw DomainError("psi_plus_integral: requires s > 1");
  if (x.re.sign() <= 0) throw DomainError("psi_plus_integral: requires Re(x) > 0");
  PrecisionScope scope(ctx);
  auto opts = quad::options_for(ctx);
  const Real s2 = s * 2;
  const Real scale = min(Real(1), Real(1) / abs(x));
  const Complex half_x2s = cpow(x, Complex(s2)) / 2;
  Complex integral;
  if (x.is_real()) {
    const Real c = half_x2s.re;
    integral = Complex(quad::exp_sinh<Real>(
        [&](const Real& t) { return (outer(t) + c) * pow(t, s2 - 1) / expm1(x.re * t); }, opts,
        "psi_plus_integral", scale));
  } else {
    integral = quad::exp_sinh<Complex>(
        [&](const Real& t) {
          Complex xt = x * t;
          Complex num = (half_x2s + outer(t)) * pow(t, s2 - 1);
          if (xt.re < 1) return num / expm1(xt);
          Complex q = exp(-xt);
          return num * q / (Real(1) - q);
        },
        opts, "psi_plus_integral", scale);
  }
  return ensure_finite(integral / gamma(s2), "psi_plus_integral");
}

GrowthCheck psi_growth_residual(const Real& s, const Real& x, const EvalContext& ctx, bool printed_form) {
  if (x.sign() <= 0) throw DomainError("psi_growth_residual: x must be positive");
  const bool large = x >= 50;
  if (!large && !(x <= Real(1) / 50)) {
    throw DomainError("psi_growth_residual: needs x >= 50 or x <= 1/50");
  }
  Real value = psi_plus(s, x, ctx);
  PrecisionScope scope(ctx);
  const double thr = ctx.asymptotic_threshold();
  const Real s2 = s * 2;
  // Expansion in y = x (large) or y = 1/x via psi(x) = x^(-2s) psi(1/x).
  const Real y = large ? x : Real(1) / x;
  const Real c3 = printed_form ? gamma(s2 + 1) / 12
                               : s2 * detail::riemann_zeta(Real(s2 + 1), thr) / 12;
  Real asym = detail::riemann_zeta(s2, thr) / 2 +
              pow(y, 1 - s2) * detail::riemann_zeta(Real(s2 - 1), thr) / (s2 - 1) +
              c3 * pow(y, -s2 - 1);
  Real next = s2 * (s2 + 1) * (s2 + 2) / 720 * detail::riemann_zeta(Real(s2 + 3), thr) *
              pow(y, -s2 - 3);
  Real factor = large ? Real(1) : pow(x, -s2);
  return {abs(value - asym * factor), abs(next * factor) * 2};
}

Real psi_three_term_residual(const Real& s, const Real& x, const EvalContext& ctx) {
  if (x.sign() <= 0) throw DomainError("psi_three_term_residual: x must be positive");
  Real x1, xr;
  {
    PrecisionScope scope(ctx);
    x1 = x + 1;
    xr = x / x1;
  }
  Real a = psi_plus(s, x, ctx);
  Real b = psi_plus(s, x1, ctx);
  Real c = psi_plus(s, xr, ctx);
  PrecisionScope scope(ctx);
  return abs(a - b - pow(x1, -(s * 2)) * c);
}

Complex E2s_q(const Complex& s, const Complex& tau, const EvalContext& ctx) {
  require_upper(tau, "E2s_q");
  const double growth = std::max(0.0, 2 * s.re.to_double() - 1) + 1;
  const long T = q_truncation(tau, growth, ctx);
  PrecisionScope scope(ctx);
  const double thr = ctx.asymptotic_threshold();
  const Complex e = s * 2 - 1;
  Complex z = detail::riemann_zeta(Complex(Real(1) - s * 2), thr);
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("E2s_q: zeta(1 - 2s) vanishes");
  std::vector<Complex> sigma(static_cast<size_t>(T + 1));
  for (long d = 1; d <= T; ++d) {
    Complex pd = d == 1 ? Complex(Real(1)) : exp(e * log(Real(d)));
    for (long m = d; m <= T; m += d) sigma[static_cast<size_t>(m)] += pd;
  }
  return ensure_finite(Complex(Real(1)) + q_sum(sigma, nome(tau)) * (Real(2) / z), "E2s_q");
}

Complex f_s(const Complex& s, const Complex& tau, const EvalContext& ctx) {
  require_upper(tau, "f_s");
  Complex a = psi_plus(s, tau, ctx);
  Complex w;
  {
    PrecisionScope scope(ctx);
    w = -(Real(1) / tau);
  }
  Complex b = psi_plus(s, w, ctx);
  PrecisionScope scope(ctx);
  return a + cpow(tau, Complex(-(s * 2))) * b;
}

Complex f_s_constant(const Complex& s, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  Complex e = exp(mul_i(s) * (-2 * const_pi()));
  return (e + 1) * detail::riemann_zeta(Complex(s * 2), ctx.asymptotic_threshold()) / 2;
}

Complex Psi_s(const Complex& s, const Complex& tau, const EvalContext& ctx) {
  require_upper(tau, "Psi_s");
  Complex w;
  {
    PrecisionScope scope(ctx);
    w = -(Real(1) / tau);
  }
  Complex a = E2s_q(s, tau, ctx);
  Complex b = E2s_q(s, w, ctx);
  PrecisionScope scope(ctx);
  return a - cpow(tau, Complex(-(s * 2))) * b;
}

Real prop63_residual(const Complex& s, const Complex& tau, const EvalContext& ctx) {
  Complex big = Psi_s(s, tau, ctx);
  Complex psi = psi_plus(s, tau, ctx);
  PrecisionScope scope(ctx);
  Complex e = exp(mul_i(s) * (-2 * const_pi()));
  Complex z = detail::riemann_zeta(Complex(s * 2), ctx.asymptotic_threshold());
  Complex factor = (Real(1) - e) * 2 / ((e + 1) * z);
  return abs(big - factor * psi);
}

}  // namespace plab
