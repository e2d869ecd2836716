#include "plab/kronecker.hpp"

#include <climits>
#include <cmath>
#include <string>

#include "plab/detail/special.hpp"
#include "plab/errors.hpp"
#include "plab/numerics.hpp"
#include "plab/parallel.hpp"
#include "plab/periodfn.hpp"
#include "plab/quadrature.hpp"

namespace plab {

namespace {

using detail::negligible;

Real binom(long n, long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Real(b);
}

Real factorial(long n) {
  Real f;
  mpfr_fac_ui(f.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  return f;
}

class TailGuard {
 public:
  explicit TailGuard(const char* what) : what_(what) {}
  void check(long m, int k) {
    if (k > 400 || (k > 3 && m != LONG_MIN && m > last_ + 2)) {
      throw ConvergenceError(std::string(what_) + ": expansion stopped converging");
    }
    last_ = m;
  }

 private:
  const char* what_;
  long last_ = LONG_MAX;
};

struct Pair {
  Real x, y;  // w > w'
};

Pair pair_of(const QuadIrr& w, const char* what) {
  if (!is_reduced(w)) throw DomainError(std::string(what) + ": " + w.to_string() + " is not reduced");
  return {w.value(), conjugate(w).value()};
}

// Partial fractions of ((x-y)/((t+x)(t+y)))^k = sum_i alpha_i (t+y)^-i + beta_i (t+x)^-i.
struct PartialFractions {
  std::vector<Real> alpha, beta;  // index 1..k

  PartialFractions(int k, const Real& delta) : alpha(k + 1), beta(k + 1) {
    for (int i = 1; i <= k; ++i) {
      Real c = binom(2 * k - i - 1, k - i) * pow(delta, static_cast<long>(i - k));
      alpha[i] = (k - i) % 2 == 0 ? c : Real(-c);
      beta[i] = k % 2 == 0 ? c : Real(-c);
    }
  }
};

// integral_0^inf of the partial-fraction form.
Real I_closed(int k, const Real& x, const Real& y) {
  PartialFractions pf(k, x - y);
  Real sum = pf.alpha[1] * log(x / y);
  for (int i = 2; i <= k; ++i) {
    sum += (pf.alpha[i] * pow(y, static_cast<long>(1 - i)) + pf.beta[i] * pow(x, static_cast<long>(1 - i))) / (i - 1);
  }
  return sum;
}

// Binomial series for integral_0^inf (a-b)^s ((a+t)(b+t))^-s dt:
//   (a-b)^s sum_m (s)_m/m! ((a-b)/2)^2m c^(1-2s-2m)/(2s+2m-1),  c = (a+b)/2.
Complex I_series_raw(const Complex& s, const Real& a, const Real& b, long max_terms) {
  const Real delta = a - b;
  const Real c = (a + b) / 2;
  const Real z = sqr(delta / (2 * c));
  Complex coef = exp(s * log(delta) + (Real(1) - s * 2) * log(c));  // (s)_m/m! z^m delta^s c^(1-2s)
  Complex sum;
  for (long m = 0;; ++m) {
    Complex term = coef / (s * 2 + (2 * m - 1));
    sum += term;
    if (m > 2 && negligible(term, sum)) break;
    if (m > max_terms) throw ConvergenceError("I_s: binomial series did not converge");
    coef *= (s + m) / (m + 1);
    coef *= z;
  }
  return sum;
}

Complex I_quad(const Complex& s, const Real& x, const Real& y, const EvalContext& ctx) {
  const Real ld = log(x - y);
  auto opts = quad::options_for(ctx);
  const Real scale = sqrt(x * y);
  if (s.is_real()) {
    const Real sr = s.re;
    return Complex(quad::exp_sinh<Real>(
        [&](const Real& t) { return exp(sr * (ld - log(x + t) - log(y + t))); }, opts, "I_s", scale));
  }
  return quad::exp_sinh<Complex>(
      [&](const Real& t) { return exp(s * (ld - log(x + t) - log(y + t))); }, opts, "I_s", scale);
}

// Series when it converges reasonably fast, quadrature otherwise.
Complex I_auto(const Complex& s, const Real& x, const Real& y, const EvalContext& ctx) {
  Real rho = (x - y) / (x + y);
  if (sqr(rho) <= 0.95) return I_series_raw(s, x, y, ctx.max_terms());
  return I_quad(s, x, y, ctx);
}

void require_strip(const Complex& s, const char* what) {
  if (!(s.re > 0.5)) throw DomainError(std::string(what) + ": needs Re(s) > 1/2");
}

// Taylor coefficients of (a+u)^-s (b+u)^-s / (a^-s b^-s) at u = 0, extended on demand.
class ProductTaylor {
 public:
  ProductTaylor(const Complex& s, Real a, Real b) : s_(s), ainv_(Real(1) / a), binv_(Real(1) / b) {
    ca_.emplace_back(Real(1));
    cb_.emplace_back(Real(1));
  }
  // Coefficient of u^m.
  Complex coeff(int m) {
    while (static_cast<int>(ca_.size()) <= m) {
      const long j = static_cast<long>(ca_.size());
      // binom(-s, j) = binom(-s, j-1) (-s-j+1)/j
      Complex f = (-s_ - (j - 1)) / j;
      ca_.push_back(ca_.back() * f * ainv_);
      cb_.push_back(cb_.back() * f * binv_);
    }
    Complex sum;
    for (int i = 0; i <= m; ++i) sum += ca_[i] * cb_[m - i];
    return sum;
  }

 private:
  Complex s_;
  Real ainv_, binv_;
  std::vector<Complex> ca_, cb_;
};

Complex cpow_real(const Real& base, const Complex& e) { return exp(e * log(base)); }

}  // namespace

NarrowClassData::NarrowClassData(std::string name_, Integer d_, Cycle cycle_)
    : name(std::move(name_)), d(std::move(d_)), cycle(std::move(cycle_)), reduced(cycle_to_reduced(cycle, d)) {}

std::vector<NarrowClassData> sqrt3_classes() {
  return {NarrowClassData("B0", 3, {4}), NarrowClassData("B1", 3, {2, 3})};
}

Complex I_s(const Complex& s, const Real& x, const Real& y, const EvalContext& ctx) {
  require_strip(s, "I_s");
  if (!(x > y) || !(y > 0)) throw DomainError("I_s: needs x > y > 0");
  PrecisionScope scope(ctx);
  return ensure_finite(I_quad(s, x, y, ctx), "I_s");
}

Complex I_s_series(const Complex& s, const Real& x, const Real& y, const EvalContext& ctx) {
  require_strip(s, "I_s_series");
  if (!(x > y) || !(y > 0)) throw DomainError("I_s_series: needs x > y > 0");
  PrecisionScope scope(ctx);
  return ensure_finite(I_series_raw(s, x, y, ctx.max_terms()), "I_s_series");
}

Real Z_direct(int k, const QuadIrr& w, const EvalContext& ctx) {
  if (k < 3) throw DomainError("Z_direct: k must be >= 3");
  PrecisionScope scope(ctx);
  const auto [x, y] = pair_of(w, "Z_direct");
  const Real delta = x - y;
  const double thr = ctx.asymptotic_threshold();
  const double pmax = std::max(10.0, std::ceil(thr / y.to_double()));
  if (!(pmax <= static_cast<double>(ctx.max_terms()))) throw ConvergenceError("Z_direct: p-range exceeds max_terms");
  const long P = static_cast<long>(pmax);

  // Inner q-sum in closed form: Hurwitz values plus a digamma difference.
  Real head = sum_terms<Real>(
      1, P + 1,
      [&](long p) {
        const Real A = x * p, B = y * p, dp = delta * p;
        Real sum;
        for (int i = 2; i <= k; ++i) {
          Real c = binom(2 * k - i - 1, k - i) * pow(dp, static_cast<long>(i - k));
          Real zb = detail::hurwitz_zeta(Real(i), B, thr);
          Real za = detail::hurwitz_zeta(Real(i), A, thr);
          sum += c * (((k - i) % 2 == 0 ? zb : Real(-zb)) + (k % 2 == 0 ? za : Real(-za)));
        }
        Real a1 = binom(2 * k - 2, k - 1) * pow(dp, static_cast<long>(1 - k));
        if ((k - 1) % 2 != 0) a1 = -a1;
        sum += a1 * (detail::digamma(A, thr) - detail::digamma(B, thr));
        return sum;
      },
      ctx.exec());

  // p > P through the Euler-Maclaurin expansion of the q-sum in 1/p.
  PartialFractions pf(k, delta);
  const Real a = Real(P + 1);
  Real tail = I_closed(k, x, y) * detail::hurwitz_zeta(Real(k - 1), a, thr) +
              pow(delta / (x * y), static_cast<long>(k)) / 2 * detail::hurwitz_zeta(Real(k), a, thr);
  // poch[i] = (i)_m, powers y^(-i-m), x^(-i-m) for m = 2j - 1
  std::vector<Real> poch(k + 1), py(k + 1), px(k + 1);
  for (int i = 1; i <= k; ++i) {
    poch[i] = Real(i);
    py[i] = pow(y, static_cast<long>(-i - 1));
    px[i] = pow(x, static_cast<long>(-i - 1));
  }
  const Real y2 = Real(1) / sqr(y), x2 = Real(1) / sqr(x);
  TailGuard guard("Z_direct");
  for (int j = 1;; ++j) {
    const int m = 2 * j - 1;
    Real deriv;  // g^(m)(0), m odd so (-1)^m = -1
    for (int i = 1; i <= k; ++i) deriv -= poch[i] * (pf.alpha[i] * py[i] + pf.beta[i] * px[i]);
    Real term = detail::bernoulli_over_factorial(j) * deriv * detail::hurwitz_zeta(Real(k + m), a, thr);
    tail -= term;
    if (negligible(term, head)) break;
    guard.check(detail::mag(term), j);
    for (int i = 1; i <= k; ++i) {
      poch[i] *= Real(i + m) * (i + m + 1);
      py[i] *= y2;
      px[i] *= x2;
    }
  }
  return ensure_finite(Real(head + tail), "Z_direct");
}

OracleValue Z_raw_oracle(int k, const QuadIrr& w, long P, long Q, const EvalContext& ctx) {
  if (k < 3) throw DomainError("Z_raw_oracle: k must be >= 3");
  if (P < 100 || Q < 100) throw DomainError("Z_raw_oracle: P and Q must be >= 100");
  Real xr, yr;
  {
    PrecisionScope scope(ctx);
    auto pr = pair_of(w, "Z_raw_oracle");
    xr = pr.x;
    yr = pr.y;
  }
  const long double xl = mpfr_get_ld(xr.get(), MPFR_RNDN);
  const long double yl = mpfr_get_ld(yr.get(), MPFR_RNDN);
  const long double delta = xl - yl;

  auto powk = [k](long double v) {
    long double r = 1;
    for (int i = 0; i < k; ++i) r *= v;
    return r;
  };
  // integral_T^inf (dp / ((A+t)(B+t)))^k dt by the binomial series about c = (A+B)/2.
  auto tail_integral = [&](long double dp, long double A, long double B, long double T) {
    const long double c = (A + B) / 2 + T;
    const long double z = (dp / (2 * c)) * (dp / (2 * c));
    long double coef = powk(dp) * std::pow(c, static_cast<long double>(1 - 2 * k));
    long double sum = 0;
    for (long m = 0; m < 100000; ++m) {
      long double term = coef / (2 * k + 2 * m - 1);
      sum += term;
      if (term < sum * 1e-21L) break;
      coef *= static_cast<long double>(k + m) / (m + 1) * z;
    }
    return sum;
  };

  long double total = 0, comp = 0, qerr = 0;
  for (long p = 1; p <= P; ++p) {
    const long double A = p * xl, B = p * yl, dp = p * delta;
    long double inner = 0, ic = 0;
    for (long q = Q; q >= 0; --q) {  // small terms first
      long double v = powk(dp / ((q + A) * (q + B)));
      long double t = inner + v;
      ic += (inner - t) + v;
      inner = t;
    }
    inner += ic;
    inner += tail_integral(dp, A, B, Q + 0.5L);
    const long double fQ = powk(dp / ((Q + A) * (Q + B)));
    qerr += 2 * k * fQ / (24 * (Q + B));
    long double t = total + inner;
    comp += (total - t) + inner;
    total = t;
  }
  total += comp;

  PrecisionScope scope(ctx);
  // p > P: S(p) ~ I p^(1-k) + g(0)/2 p^-k, integrated from P + 1/2.
  Real I = I_s(Complex(Real(k)), xr, yr, ctx).re;
  const Real g0 = pow((xr - yr) / (xr * yr), static_cast<long>(k));
  const Real Pm = Real(P) + Real(0.5);
  Real ptail = I * pow(Pm, static_cast<long>(2 - k)) / (k - 2) + g0 / 2 * pow(Pm, static_cast<long>(1 - k)) / (k - 1);
  Real value;
  mpfr_set_ld(value.get(), total, MPFR_RNDN);
  value += ptail;
  const Real gp0 = g0 * k * (Real(1) / xr + Real(1) / yr);
  const Real Pk = pow(Real(P), static_cast<long>(-k));
  Real bound = 2 * ((k - 1) * abs(I) * Pk / 24 + gp0 * Pk / (12 * k) + Real(static_cast<double>(qerr))) +
               abs(value) * 1e-17;
  return {value, bound};
}

Complex Z_continued(const Complex& s, const QuadIrr& w, const EvalContext& ctx) {
  require_strip(s, "Z_continued");
  if (s.is_real() && (s.re == 1 || s.re == 2)) throw PoleError("Z_continued: pole at s = " + to_string(s.re, 3));
  PrecisionScope scope(ctx);
  const auto [x, y] = pair_of(w, "Z_continued");
  const Real delta = x - y;
  const double thr = ctx.asymptotic_threshold();
  const double pmax = std::max(10.0, std::ceil(thr / y.to_double()));
  if (!(pmax <= static_cast<double>(ctx.max_terms()))) throw ConvergenceError("Z_continued: p-range exceeds max_terms");
  const long P = static_cast<long>(pmax);
  const Complex I = I_auto(s, x, y, ctx);

  // p^s { inner_p - I/p^(2s-1) - delta^s/(2 p^2s (xy)^s) }, the q-sum done by
  // Euler-Maclaurin from q = Q_p on.
  Complex body = sum_terms<Complex>(
      1, P + 1,
      [&](long p) {
        const Real A = x * p, B = y * p, dp = delta * p;
        const Real ldp = log(dp);
        auto f = [&](const Real& t) { return exp(s * (ldp - log(A + t) - log(B + t))); };
        const double qd = std::max(0.0, std::ceil(thr - B.to_double()));
        const long Q = static_cast<long>(qd);
        const Complex f0 = f(Real(0));
        Complex bracket;
        if (Q > 0) {
          for (long q = 0; q < Q; ++q) bracket += q == 0 ? f0 : f(Real(q));
          const Complex fq = f(Real(Q));
          // integral_0^Q f = p^(1-s) I - integral_Q^inf f
          Complex int0Q = cpow_real(Real(p), Real(1) - s) * I - I_auto(s, A + Q, B + Q, ctx);
          bracket += (fq - f0) / 2 - int0Q;
        }
        const Complex fQ = Q > 0 ? f(Real(Q)) : f0;
        ProductTaylor taylor(s, A + Q, B + Q);
        TailGuard guard("Z_continued");
        for (int j = 1;; ++j) {
          const int m = 2 * j - 1;
          // B_2j/(2j)! f^(m)(Q) = B_2j/(2j)! m! f(Q) coeff_m
          Complex term = fQ * taylor.coeff(m) * (detail::bernoulli_real(2 * j) / (2 * j));
          bracket -= term;
          if (negligible(term, f0)) break;
          guard.check(detail::mag(term), j);
        }
        return bracket;
      },
      ctx.exec());

  // p > P: -sum_j B_2j/(2j)! g^(2j-1)(0) zeta(s+2j-1, P+1), g(u) = delta^s ((x+u)(y+u))^-s.
  const Complex g0 = cpow_real(delta / (x * y), s);
  ProductTaylor taylor(s, x, y);
  const Complex a = Complex(Real(P + 1));
  Complex tail;
  TailGuard guard("Z_continued");
  for (int j = 1;; ++j) {
    const int m = 2 * j - 1;
    Complex term = g0 * taylor.coeff(m) * (detail::bernoulli_real(2 * j) / (2 * j)) *
                   detail::hurwitz_zeta(Complex(s + m), a, thr);
    tail -= term;
    if (negligible(term, g0)) break;
    guard.check(detail::mag(term), j);
  }

  Complex main = g0 / 2 * detail::riemann_zeta(s, thr) + detail::riemann_zeta(Complex(s - 1), thr) * I;
  return ensure_finite(Complex(main + body + tail), "Z_continued");
}

Real P_tilde(const Real& x, const Real& y, const EvalContext& ctx) {
  if (!(x > y) || !(y > 0)) throw DomainError("P_tilde: needs x > y > 0");
  Real fx = F1(x, ctx);
  Real fy = F1(y, ctx);
  PrecisionScope scope(ctx);
  const Real r = (x - y) / (x * y);
  return fx - fy - r / 2 * (const_euler() + log(r));
}

Real laurent_constant(const Real& x, const Real& y, const EvalContext& ctx) {
  if (!(x > y) || !(y > 0)) throw DomainError("laurent_constant: needs x > y > 0");
  Real fx = F1(x, ctx);
  Real fy = F1(y, ctx);
  PrecisionScope scope(ctx);
  const Real r = (x - y) / (x * y);
  return fx - fy + r / 2 * (const_euler() + log(r));
}

Laurent laurent_at_one(const QuadIrr& w, const Real& h, const EvalContext& ctx) {
  Complex up, dn;
  {
    PrecisionScope scope(ctx);
    up = Complex(Real(1) + h);
    dn = Complex(Real(1) - h);
  }
  Real zu = Z_continued(up, w, ctx).re;
  Real zd = Z_continued(dn, w, ctx).re;
  PrecisionScope scope(ctx);
  return {(zu - zd) * h / 2, (zu + zd) / 2};
}

Real D_op(int n, const std::vector<Real>& fx, const std::vector<Real>& fy, const Real& x, const Real& y,
          const EvalContext& ctx) {
  if (n < 0) throw DomainError("D_op: n must be >= 0");
  if (static_cast<int>(fx.size()) < n + 1 || static_cast<int>(fy.size()) < n + 1) {
    throw DomainError("D_op: need derivatives of order 0..n at both points");
  }
  if (x == y) throw DomainError("D_op: x and y must differ");
  PrecisionScope scope(ctx);
  const Real yx = y - x;
  Real sum;
  for (int i = 0; i <= n; ++i) {
    Real diff = i % 2 == 0 ? fx[i] - fy[i] : fx[i] + fy[i];
    sum += binom(2 * n - i, n) * diff / (factorial(i) * pow(yx, static_cast<long>(n - i)));
  }
  return sum;
}

Real higher_klf_rhs(int k, const NarrowClassData& cls, const EvalContext& ctx) {
  if (k < 3) throw DomainError("higher_klf_rhs: k must be >= 3");
  Real total;
  for (const QuadIrr& w : cls.reduced) {
    Real x, y;
    {
      PrecisionScope scope(ctx);
      auto pr = pair_of(w, "higher_klf_rhs");
      x = pr.x;
      y = pr.y;
    }
    std::vector<Real> fx, fy;
    for (int i = 0; i < k; ++i) {
      fx.push_back(Fk_derivative(k, i, x, ctx));
      fy.push_back(Fk_derivative(k, i, y, ctx));
    }
    Real v = D_op(k - 1, fx, fy, x, y, ctx);
    PrecisionScope scope(ctx);
    total += v;
  }
  return total;
}

Real partial_zeta(int k, const NarrowClassData& cls, const EvalContext& ctx) {
  Real total;
  for (const QuadIrr& w : cls.reduced) {
    Real v = Z_direct(k, w, ctx);
    PrecisionScope scope(ctx);
    total += v;
  }
  return total;
}

}  // namespace plab
