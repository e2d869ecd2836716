#include "plab/periodfn.hpp"

#include <cmath>
#include <string>

#include "plab/detail/special.hpp"
#include "plab/errors.hpp"
#include "plab/numerics.hpp"
#include "plab/parallel.hpp"
#include "plab/quadrature.hpp"

namespace plab {

namespace {

using detail::negligible;

void require_off_cut(const Real& x, const char* what) {
  if (x.sign() <= 0) throw DomainError(std::string(what) + ": x must be positive");
}

void require_off_cut(const Complex& x, const char* what) {
  if (x.im.is_zero() && x.re.sign() <= 0) {
    throw DomainError(std::string(what) + ": x lies on the cut (-inf, 0]");
  }
}

// Head length N.  Past N the Bernoulli tail in 1/(nx) is accurate; for
// Re(x) < 0 the reflection terms exp(-2 pi n |Im x|) must also be negligible.
template <class T>
long head_length(const T& x, const EvalContext& ctx, const char* what) {
  const double ax = abs(x).to_double();
  double n = std::max(50.0, std::ceil(ctx.asymptotic_threshold() / ax));
  if (real_part(x).sign() < 0) {
    const double im = std::fabs(imag_part(x).to_double());
    n = std::max(n, std::ceil(ctx.working_digits() * std::log(10.0) / (2 * M_PI * im)));
  }
  if (!(n <= static_cast<double>(ctx.max_terms()))) {
    throw ConvergenceError(std::string(what) + ": needs more than max_terms series terms");
  }
  return static_cast<long>(n);
}

bool settled(const Real& term, const Real& a, const Real& b) {
  return negligible(term, a) || negligible(term, b);
}
bool settled(const Complex& term, const Complex& a, const Complex& b) {
  return negligible(term, a) || negligible(term, b);
}

// Guards a tail expansion against running into its divergent regime.
class TailGuard {
 public:
  explicit TailGuard(const char* what) : what_(what) {}
  void check(long m, int k) {
    if (k > 400 || (k > 3 && m != LONG_MIN && m > last_ + 2)) {
      throw ConvergenceError(std::string(what_) + ": tail expansion stopped converging");
    }
    last_ = m;
  }

 private:
  const char* what_;
  long last_ = LONG_MAX;
};

Real hz(long s, long a, double thr) { return detail::hurwitz_zeta(Real(s), Real(a), thr); }

template <class T>
T frak_F1_series(const T& x, const EvalContext& ctx) {
  const double thr = ctx.asymptotic_threshold();
  const long N = head_length(x, ctx, "frak_F1");
  T head = sum_terms<T>(
      1, N + 1, [&](long n) { return detail::digamma_remainder(T(x * n), thr); }, ctx.exec());
  // sum_{n>N} R(nx) = -sum_k B_2k/(2k x^2k) zeta(2k, N+1)
  T x2inv = Real(1) / sqr(x);
  T p = x2inv;
  T tail{};
  TailGuard guard("frak_F1");
  for (int k = 1;; ++k) {
    T term = p * (detail::bernoulli_real(2 * k) / (2 * k) * hz(2 * k, N + 1, thr));
    tail -= term;
    if (settled(term, head, tail)) break;
    guard.check(detail::mag(term), k);
    p *= x2inv;
  }
  return head + tail;
}

template <class T>
T frak_F2_series(const T& x, const EvalContext& ctx) {
  const double thr = ctx.asymptotic_threshold();
  const long N = head_length(x, ctx, "frak_Fk");
  T head = sum_terms<T>(
      1, N + 1,
      [&](long n) {
        T nx = x * n;
        return (detail::digamma_remainder(nx, thr) - Real(1) / (nx * 2)) / n;
      },
      ctx.exec());
  T tail = -(Real(1) / (x * 2)) * hz(2, N + 1, thr);
  T x2inv = Real(1) / sqr(x);
  T p = x2inv;
  TailGuard guard("frak_Fk");
  for (int j = 1;; ++j) {
    T term = p * (detail::bernoulli_real(2 * j) / (2 * j) * hz(2 * j + 1, N + 1, thr));
    tail -= term;
    if (settled(term, head, tail)) break;
    guard.check(detail::mag(term), j);
    p *= x2inv;
  }
  return head + tail;
}

template <class T>
T frak_Fk_series(int k, const T& x, const EvalContext& ctx) {
  const double thr = ctx.asymptotic_threshold();
  const long N = head_length(x, ctx, "frak_Fk");
  T head = sum_terms<T>(
      1, N + 1, [&](long n) { return detail::digamma(T(x * n), thr) * pow(Real(n), 1L - k); },
      ctx.exec());
  // sum_{n>N} n^(1-k) [log x + log n - 1/(2nx) - sum_j B_2j/(2j (nx)^2j)]
  T tail = log(x) * hz(k - 1, N + 1, thr);
  tail -= T(hurwitz_zeta_deriv(Real(k - 1), Real(N + 1), ctx));
  tail -= (Real(1) / (x * 2)) * hz(k, N + 1, thr);
  T x2inv = Real(1) / sqr(x);
  T p = x2inv;
  TailGuard guard("frak_Fk");
  for (int j = 1;; ++j) {
    T term = p * (detail::bernoulli_real(2 * j) / (2 * j) * hz(k - 1 + 2 * j, N + 1, thr));
    tail -= term;
    if (settled(term, head, tail)) break;
    guard.check(detail::mag(term), j);
    p *= x2inv;
  }
  return head + tail;
}

template <class T>
T frak_Fk_any(int k, const T& x, const EvalContext& ctx) {
  if (k < 1) throw DomainError("frak_Fk: k must be >= 1");
  require_off_cut(x, "frak_Fk");
  PrecisionScope scope(ctx);
  if (k == 1) return frak_F1_series(x, ctx);
  if (k == 2) return frak_F2_series(x, ctx);
  return frak_Fk_series(k, x, ctx);
}

// (gamma - log(2 pi / x)) / 2
template <class T>
T F1_shift(const T& x) {
  return (T(const_euler() - log(2 * const_pi())) + log(x)) / 2;
}

// 1/(e^t - 1) - 1/t + 1/2, with the series sum_k B_2k t^(2k-1)/(2k)! near 0.
Real bracket(const Real& t) {
  if (t < 1e-3) {
    Real sum;
    Real t2 = sqr(t);
    Real p = t;
    for (int k = 1;; ++k) {
      Real term = p * detail::bernoulli_over_factorial(k);
      sum += term;
      if (negligible(term, sum)) break;
      p *= t2;
    }
    return sum;
  }
  return Real(1) / expm1(t) - Real(1) / t + Real(0.5);
}

// Coefficient zeta(1-n) zeta(n) of x^-n (n even).
Real asym_coeff(int n, double thr) {
  return Real(zeta_neg_int(n)) * detail::riemann_zeta(Real(n), thr);
}

Asymptotic asym_large(const Complex& x, int terms, double thr) {
  Complex value = -F1_shift(x);
  Complex xinv = Real(1) / x;
  Complex p = sqr(xinv);
  for (int n = 2; n <= terms + 1; ++n) {
    if (n % 2 == 0) value += p * asym_coeff(n, thr);
    p *= xinv;
  }
  int first = terms + 2;
  if (first % 2 != 0) ++first;
  Real bound = abs(asym_coeff(first, thr)) * pow(abs(x), -static_cast<long>(first));
  return {value, bound};
}

}  // namespace

EvalMethod parse_method(std::string_view name) {
  if (name == "series") return EvalMethod::series;
  if (name == "integral") return EvalMethod::integral;
  if (name == "asymptotic") return EvalMethod::asymptotic;
  throw ParseError("unknown method '" + std::string(name) + "' (series, integral, asymptotic)");
}

const char* method_name(EvalMethod m) {
  switch (m) {
    case EvalMethod::series:
      return "series";
    case EvalMethod::integral:
      return "integral";
    case EvalMethod::asymptotic:
      return "asymptotic";
  }
  return "?";
}

Complex frak_F1(const Complex& x, const EvalContext& ctx) { return frak_Fk_any(1, x, ctx); }
Real frak_F1(const Real& x, const EvalContext& ctx) { return frak_Fk_any(1, x, ctx); }
Complex frak_Fk(int k, const Complex& x, const EvalContext& ctx) { return frak_Fk_any(k, x, ctx); }
Real frak_Fk(int k, const Real& x, const EvalContext& ctx) { return frak_Fk_any(k, x, ctx); }

Real F1(const Real& x, const EvalContext& ctx) {
  Real f = frak_F1(x, ctx);
  PrecisionScope scope(ctx);
  return f - F1_shift(x);
}

Complex F1(const Complex& x, const EvalContext& ctx, EvalMethod method) {
  switch (method) {
    case EvalMethod::integral:
      return F1_integral(x, ctx);
    case EvalMethod::asymptotic: {
      require_off_cut(x, "F1");
      PrecisionScope scope(ctx);
      const double thr = ctx.asymptotic_threshold();
      const bool small = abs(x) < 1;
      Complex y = small ? Complex(Real(1) / x) : x;
      if (abs(y) < 2) throw DomainError("F1: asymptotic route needs |x| >= 2 or |x| <= 1/2");
      // Add terms while they shrink; the smallest one is the attainable accuracy.
      Real target = pow(Real(10), -static_cast<long>(ctx.working_digits())) * abs(F1_shift(y));
      int terms = 1;
      Asymptotic a = asym_large(y, terms, thr);
      while (a.bound > target) {
        Asymptotic next = asym_large(y, terms + 2, thr);
        if (next.bound >= a.bound) break;
        a = std::move(next);
        terms += 2;
      }
      if (a.bound > pow(Real(10), -static_cast<long>(ctx.precision_digits())) * abs(a.value)) {
        throw DomainError("F1: asymptotic route cannot reach the requested precision at this x");
      }
      return small ? Complex(a.value * y) : a.value;
    }
    case EvalMethod::series:
      break;
  }
  Complex f = frak_F1(x, ctx);
  PrecisionScope scope(ctx);
  return f - F1_shift(x);
}

Complex F1_integral(const Complex& x, const EvalContext& ctx) {
  if (x.re.sign() <= 0) throw DomainError("F1_integral: requires Re(x) > 0");
  PrecisionScope scope(ctx);
  auto opts = quad::options_for(ctx);
  const Real scale = min(Real(1), Real(1) / abs(x));
  Complex integral;
  if (x.is_real()) {
    integral = Complex(quad::exp_sinh<Real>(
        [&](const Real& t) { return bracket(t) / expm1(x.re * t); }, opts, "F1_integral", scale));
  } else {
    integral = quad::exp_sinh<Complex>(
        [&](const Real& t) {
          Complex xt = x * t;
          if (xt.re < 1) return Complex(bracket(t)) / expm1(xt);
          Complex q = exp(-xt);
          return q * bracket(t) / (Real(1) - q);
        },
        opts, "F1_integral", scale);
  }
  return -integral - F1_shift(x);
}

Asymptotic F1_asymptotic(const Complex& x, int terms, const EvalContext& ctx) {
  if (terms < 1) throw DomainError("F1_asymptotic: terms must be >= 1");
  require_off_cut(x, "F1_asymptotic");
  PrecisionScope scope(ctx);
  const double thr = ctx.asymptotic_threshold();
  Real r = abs(x);
  if (r >= 2) return asym_large(x, terms, thr);
  if (r <= 0.5) {
    Complex y = Real(1) / x;
    Asymptotic a = asym_large(y, terms, thr);
    return {a.value / x, a.bound / r};
  }
  throw DomainError("F1_asymptotic: unreliable for 1/2 < |x| < 2");
}

Real Fk_derivative(int k, int i, const Real& x, const EvalContext& ctx) {
  if (k < 3) throw DomainError("Fk_derivative: k must be >= 3");
  if (i < 0 || i >= k) throw DomainError("Fk_derivative: need 0 <= i <= k - 1");
  require_off_cut(x, "Fk_derivative");
  if (i == 0) return frak_Fk(k, x, ctx);
  PrecisionScope scope(ctx);
  const double thr = ctx.asymptotic_threshold();
  const long N = head_length(x, ctx, "Fk_derivative");
  Real head = sum_terms<Real>(
      1, N + 1,
      [&](long n) { return detail::polygamma(i, Real(x * n), thr) * pow(Real(n), 1L - k + i); },
      ctx.exec());
  // psi^(i)(z) ~ (-1)^(i+1) [(i-1)! z^-i + i!/2 z^(-i-1) + sum_j B_2j (2j+i-1)!/(2j)! z^(-2j-i)]
  Real fact_im1;
  mpfr_fac_ui(fact_im1.get(), static_cast<unsigned long>(i - 1), MPFR_RNDN);
  Real xinv = Real(1) / x;
  Real xi = pow(xinv, static_cast<long>(i));
  Real tail = fact_im1 * xi * hz(k - 1, N + 1, thr) + fact_im1 * i / 2 * xi * xinv * hz(k, N + 1, thr);
  Real x2inv = sqr(xinv);
  Real p = xi * x2inv;
  // c_j = (2j+i-1)!/(2j)!, starting at j = 1: (i+1)!/2
  Real c = fact_im1 * i * (i + 1) / 2;
  TailGuard guard("Fk_derivative");
  for (int j = 1;; ++j) {
    Real term = p * c * detail::bernoulli_real(2 * j) * hz(k - 1 + 2 * j, N + 1, thr);
    tail += term;
    if (settled(term, head, tail)) break;
    guard.check(detail::mag(term), j);
    p *= x2inv;
    c = c * ((2 * j + i) * (2 * j + i + 1)) / ((2 * j + 1) * (2 * j + 2));
  }
  if (i % 2 == 0) tail = -tail;
  return head + tail;
}

}  // namespace plab
