#include "plab/numerics.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <type_traits>
#include <string>
#include <vector>

#include "plab/detail/special.hpp"
#include "plab/errors.hpp"

namespace plab {

namespace {

std::mutex bernoulli_mutex;

std::vector<Rational>& bernoulli_table() {
  static std::vector<Rational> table{Rational(1)};
  return table;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Real factorial(long n) {
  Real r;
  mpfr_fac_ui(r.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  return r;
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli: negative index");
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  auto& t = bernoulli_table();
  while (static_cast<int>(t.size()) <= n) {
    const auto m = static_cast<unsigned long>(t.size());
    Rational s = 0;
    for (unsigned long k = 0; k < m; ++k) {
      if (k > 1 && (k & 1UL)) continue;
      s += Rational(binomial(m + 1, k)) * t[k];
    }
    Rational b = -s / Rational(static_cast<long>(m + 1));
    b.canonicalize();
    t.push_back(b);
  }
  return t[static_cast<size_t>(n)];
}

Rational zeta_neg_int(int n) {
  if (n < 1) throw DomainError("zeta_neg_int: n must be >= 1");
  if (n == 1) return Rational(-1, 2);
  Rational r = -bernoulli(n) / Rational(n);
  r.canonicalize();
  return r;
}

namespace detail {

namespace {

struct RealCache {
  std::map<long, std::deque<Real>> bern;
  std::map<long, std::deque<Real>> bern_fact;
};

thread_local RealCache real_cache;

constexpr int kMaxAsymptoticTerms = 400;

long shift_count(const Real& re, const Real& modulus, double thr) {
  if (re.sign() > 0 && modulus >= thr) return 0;
  double need = std::ceil(thr - re.to_double());
  return need > 0 ? static_cast<long>(need) : 0;
}

template <class T>
long shift_count(const T& z, double thr) {
  return shift_count(real_part(z), abs(z), thr);
}

// Tracks the magnitudes of successive asymptotic terms and rejects growth.
class DivergenceGuard {
 public:
  explicit DivergenceGuard(const char* what) : what_(what) {}
  template <class T>
  void check(const T& term, int k) {
    long m = mag(term);
    if (k > kMaxAsymptoticTerms || (k > 2 && m != LONG_MIN && m > last_ + 2)) {
      throw ConvergenceError(std::string(what_) + ": asymptotic series stopped converging");
    }
    last_ = m;
  }

 private:
  const char* what_;
  long last_ = LONG_MAX;
};

// sum_k B_2k / (2k w^2k)
template <class T>
T digamma_asymptotic_tail(const T& w) {
  T w2inv = Real(1) / sqr(w);
  T p = w2inv;
  T sum{};
  DivergenceGuard guard("digamma");
  for (int k = 1;; ++k) {
    T term = p * (bernoulli_real(2 * k) / (2 * k));
    sum += term;
    if (negligible(term, sum)) break;
    guard.check(term, k);
    p *= w2inv;
  }
  return sum;
}

bool integer_exponent(const Real& s, long& out) {
  if (!s.is_integer() || abs(s) > 1000000) return false;
  out = s.to_long();
  return true;
}

bool integer_exponent(const Complex& s, long& out) {
  return s.is_real() && integer_exponent(s.re, out);
}

// base^-s, with fast paths for integral exponents.
Real pow_neg(const Real& b, const Real& s, bool is_int, long si) {
  return is_int ? pow(b, -si) : pow(b, -s);
}

Complex pow_neg(const Complex& b, const Complex& s, bool is_int, long si) {
  if (is_int) return pow(b, -si);
  if (b.is_real() && b.re.sign() > 0) {
    if (s.is_real()) return Complex(pow(b.re, -s.re));
    return exp(-(s * log(b.re)));
  }
  return exp(-(s * log(b)));
}

// sum_k B_2k/(2k)! (s)_{2k-1} w^{-s-2k+1}, given w^{-s}.
template <class T>
T hurwitz_em_tail(const T& s, const T& w, const T& w_negs) {
  T winv = Real(1) / w;
  T w2inv = sqr(winv);
  T p = w_negs * winv;
  T poch = s;
  T sum{};
  DivergenceGuard guard("hurwitz_zeta");
  for (int k = 1;; ++k) {
    T term = p * poch * bernoulli_over_factorial(k);
    sum += term;
    if (negligible(term, sum) || (poch == T{})) break;
    guard.check(term, k);
    poch *= (s + (2 * k - 1)) * (s + 2 * k);
    p *= w2inv;
  }
  return sum;
}

bool is_one(const Real& s) { return s == 1; }
bool is_one(const Complex& s) { return s.is_real() && s.re == 1; }

template <class T>
T hurwitz_core(const T& s, const T& a, double thr, bool remainder_only) {
  if (is_one(s)) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (real_part(a).sign() <= 0) throw DomainError("hurwitz_zeta: requires Re(a) > 0");
  long si = 0;
  const bool is_int = integer_exponent(s, si);
  const double radius = thr + abs(s).to_double() / 3.141592653589793;
  const T s_minus_1 = s - 1;
  if (abs(a) >= radius) {
    T a_negs = pow_neg(a, s, is_int, si);
    T tail = hurwitz_em_tail(s, a, a_negs);
    if (remainder_only) return tail;
    return tail + a_negs * a / s_minus_1 + a_negs / 2;
  }
  long J = static_cast<long>(std::ceil(radius - real_part(a).to_double()));
  if (J < 1) J = 1;
  T sum{};
  for (long j = 0; j < J; ++j) sum += pow_neg(a + j, s, is_int, si);
  T w = a + J;
  T w_negs = pow_neg(w, s, is_int, si);
  T z = sum + hurwitz_em_tail(s, w, w_negs) + w_negs * w / s_minus_1 + w_negs / 2;
  if (remainder_only) {
    T a_negs = pow_neg(a, s, is_int, si);
    z -= a_negs * a / s_minus_1 + a_negs / 2;
  }
  return z;
}

Real gamma_of(const Real& x, double) { return gamma(x); }
Complex gamma_of(const Complex& z, double thr) { return exp(log_gamma(z, thr)); }

Real sin_of(const Real& x) { return sin(x); }
Complex sin_of(const Complex& z) { return sin(z); }

// log(-z) - log(z) - pi cot(pi z) for non-real z, written through
// q = exp(+-2 pi i z) so that nothing cancels.
Complex reflection_excess(const Complex& z) {
  Real two_pi = 2 * const_pi();
  if (z.im.sign() > 0) {
    Complex q = exp(mul_i(z * two_pi));
    return mul_i(q * two_pi) / (Real(1) - q);
  }
  Complex q = exp(-mul_i(z * two_pi));
  return -(mul_i(q * two_pi) / (Real(1) - q));
}

Complex log1p_small(const Complex& u) {
  if (abs(u) > 0.25) return log(Real(1) + u);
  Complex sum;
  Complex p = u;
  for (int k = 1;; ++k) {
    Complex term = p / k;
    if (k % 2 == 0) term = -term;
    sum += term;
    if (negligible(term, sum)) break;
    p *= u;
  }
  return sum;
}

Real pow_pos(const Real& b, const Real& e) { return pow(b, e); }
Complex pow_pos(const Real& b, const Complex& e) { return exp(e * log(b)); }

}  // namespace

const Real& bernoulli_real(int n) {
  auto& table = real_cache.bern[working_bits()];
  while (static_cast<int>(table.size()) <= n) {
    table.emplace_back(bernoulli(static_cast<int>(table.size())));
  }
  return table[static_cast<size_t>(n)];
}

const Real& bernoulli_over_factorial(int k) {
  auto& table = real_cache.bern_fact[working_bits()];
  while (static_cast<int>(table.size()) <= k) {
    const int j = static_cast<int>(table.size());
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * j));
    Rational q = bernoulli(2 * j) / Rational(f);
    q.canonicalize();
    table.emplace_back(q);
  }
  return table[static_cast<size_t>(k)];
}

long mag(const Real& x) {
  if (x.is_zero()) return LONG_MIN;
  return static_cast<long>(mpfr_get_exp(x.get()));
}

long mag(const Complex& z) { return std::max(mag(z.re), mag(z.im)); }

bool is_nonpositive_integer(const Real& x) { return x.sign() <= 0 && x.is_integer(); }
bool is_nonpositive_integer(const Complex& z) { return z.is_real() && is_nonpositive_integer(z.re); }

template <class T>
T digamma(const T& z, double thr) {
  if (is_nonpositive_integer(z)) throw PoleError("digamma: pole at a non-positive integer");
  if (real_part(z) < 0.5) {
    Real pi = const_pi();
    return digamma(T(Real(1) - z), thr) - pi * cot(T(pi * z));
  }
  const long J = shift_count(z, thr);
  T acc{};
  for (long j = 0; j < J; ++j) acc += Real(1) / (z + j);
  T w = z + J;
  return log(w) - Real(1) / (w * 2) - digamma_asymptotic_tail(w) - acc;
}

template <class T>
T digamma_remainder(const T& z, double thr) {
  if (real_part(z) < 0.5) {
    if constexpr (std::is_same_v<T, Complex>) {
      if (!z.im.is_zero()) {
        if (z.re <= -0.5) return digamma_remainder(Complex(-z), thr) + reflection_excess(z);
        // One step right; log(1 + 1/z) does not cross the cut off the real axis.
        Complex u = Real(1) / z;
        Complex z1 = z + 1;
        return digamma_remainder(z1, thr) + log1p_small(u) - Real(1) / (z1 * 2) - u / 2;
      }
    }
    return digamma(z, thr) - log(z) + Real(1) / (z * 2);
  }
  const long J = shift_count(z, thr);
  if (J == 0) return -digamma_asymptotic_tail(z);
  T acc{};
  for (long j = 0; j < J; ++j) acc += Real(1) / (z + j);
  T w = z + J;
  return -digamma_asymptotic_tail(w) - acc + (log(w) - log(z)) - Real(1) / (w * 2) +
         Real(1) / (z * 2);
}

template <class T>
T polygamma(int m, const T& z, double thr) {
  if (m < 1) throw DomainError("polygamma: order must be >= 1");
  if (is_nonpositive_integer(z)) throw PoleError("polygamma: pole at a non-positive integer");
  const long J = shift_count(z, thr);
  T acc{};
  for (long j = 0; j < J; ++j) acc += pow(T(z + j), -static_cast<long>(m + 1));
  T w = z + J;
  T winv = Real(1) / w;
  T w2inv = sqr(winv);
  T wm = pow(w, -static_cast<long>(m));
  T res = wm * factorial(m - 1) + wm * winv * (factorial(m) / 2);
  T p = wm * w2inv;
  // c_j = (2j+m-1)! / (2j)!
  Real c = factorial(m + 1) / 2;
  DivergenceGuard guard("polygamma");
  for (int j = 1;; ++j) {
    T term = p * (bernoulli_real(2 * j) * c);
    res += term;
    if (negligible(term, res)) break;
    guard.check(term, j);
    p *= w2inv;
    c = c * ((2 * j + m) * (2 * j + m + 1)) / ((2 * j + 1) * (2 * j + 2));
  }
  if (m % 2 == 0) res = -res;
  Real mf = factorial(m);
  if (m % 2 == 0) return res - acc * mf;
  return res + acc * mf;
}

template <class T>
T hurwitz_zeta(const T& s, const T& a, double thr) {
  return hurwitz_core(s, a, thr, false);
}

template <class T>
T hurwitz_remainder(const T& s, const T& a, double thr) {
  return hurwitz_core(s, a, thr, true);
}

template <class T>
T riemann_zeta(const T& s, double thr) {
  if (is_one(s)) throw PoleError("riemann_zeta: pole at s = 1");
  long si = 0;
  if (integer_exponent(s, si) && si <= 0) return T(Real(zeta_neg_int(static_cast<int>(1 - si))));
  if (real_part(s).sign() >= 0) return hurwitz_core(s, T(Real(1)), thr, false);
  // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
  Real pi = const_pi();
  T one_minus = Real(1) - s;
  T f = pow_pos(Real(2), s) * pow_pos(pi, T(s - 1)) * sin_of(T(pi * s / 2));
  return f * gamma_of(one_minus, thr) * hurwitz_core(one_minus, T(Real(1)), thr, false);
}

Complex log_gamma(const Complex& z, double thr) {
  if (z.is_real() && z.re.sign() > 0) {
    Real r;
    int sign = 0;
    mpfr_lgamma(r.get(), &sign, z.re.get(), MPFR_RNDN);
    return Complex(r);
  }
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at a non-positive integer");
  Real pi = const_pi();
  if (z.re < 0.5) {
    // Reflection; the branch is fixed only modulo 2 pi i.
    return Complex(log(pi)) - log(sin(pi * z)) - log_gamma(Real(1) - z, thr);
  }
  const long J = shift_count(z, thr);
  Complex acc;
  for (long j = 0; j < J; ++j) acc += log(z + j);
  Complex w = z + J;
  Complex winv = Real(1) / w;
  Complex w2inv = sqr(winv);
  Complex res = (w - Real(0.5)) * log(w) - w + log(2 * pi) / 2;
  Complex p = winv;
  DivergenceGuard guard("log_gamma");
  for (int k = 1;; ++k) {
    Complex term = p * (bernoulli_real(2 * k) / ((2 * k) * (2 * k - 1)));
    res += term;
    if (negligible(term, res)) break;
    guard.check(term, k);
    p *= w2inv;
  }
  return res - acc;
}

template Real digamma<Real>(const Real&, double);
template Complex digamma<Complex>(const Complex&, double);
template Real digamma_remainder<Real>(const Real&, double);
template Complex digamma_remainder<Complex>(const Complex&, double);
template Real polygamma<Real>(int, const Real&, double);
template Complex polygamma<Complex>(int, const Complex&, double);
template Real hurwitz_zeta<Real>(const Real&, const Real&, double);
template Complex hurwitz_zeta<Complex>(const Complex&, const Complex&, double);
template Real hurwitz_remainder<Real>(const Real&, const Real&, double);
template Complex hurwitz_remainder<Complex>(const Complex&, const Complex&, double);
template Real riemann_zeta<Real>(const Real&, double);
template Complex riemann_zeta<Complex>(const Complex&, double);

}  // namespace detail

Real digamma(const Real& x, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  return ensure_finite(detail::digamma(x, ctx.asymptotic_threshold()), "digamma");
}

Complex digamma(const Complex& z, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  return ensure_finite(detail::digamma(z, ctx.asymptotic_threshold()), "digamma");
}

Real polygamma(int m, const Real& x, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  return ensure_finite(detail::polygamma(m, x, ctx.asymptotic_threshold()), "polygamma");
}

Complex polygamma(int m, const Complex& z, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  return ensure_finite(detail::polygamma(m, z, ctx.asymptotic_threshold()), "polygamma");
}

Real riemann_zeta(const Real& s, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  return ensure_finite(detail::riemann_zeta(s, ctx.asymptotic_threshold()), "riemann_zeta");
}

Complex riemann_zeta(const Complex& s, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  return ensure_finite(detail::riemann_zeta(s, ctx.asymptotic_threshold()), "riemann_zeta");
}

Real hurwitz_zeta(const Real& s, const Real& a, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  return ensure_finite(detail::hurwitz_zeta(s, a, ctx.asymptotic_threshold()), "hurwitz_zeta");
}

Complex hurwitz_zeta(const Complex& s, const Complex& a, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  return ensure_finite(detail::hurwitz_zeta(s, a, ctx.asymptotic_threshold()), "hurwitz_zeta");
}

Real hurwitz_zeta_deriv(const Real& s, const Real& a, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  if (s == 1) throw PoleError("hurwitz_zeta_deriv: pole at s = 1");
  if (a.sign() <= 0) throw DomainError("hurwitz_zeta_deriv: requires a > 0");
  const double radius = ctx.asymptotic_threshold() + abs(s).to_double() / 3.141592653589793;
  long J = a >= radius ? 0 : static_cast<long>(std::ceil(radius - a.to_double()));
  Real sum;
  for (long j = 0; j < J; ++j) {
    Real b = a + j;
    sum -= log(b) * pow(b, -s);
  }
  Real w = a + J;
  Real lw = log(w);
  Real w_negs = pow(w, -s);
  Real sm1 = s - 1;
  // d/ds [w^(1-s)/(s-1) + w^(-s)/2]
  sum -= w_negs * w * (lw / sm1 + Real(1) / sqr(sm1));
  sum -= lw * w_negs / 2;
  // d/ds of sum_k c_k (s)_{2k-1} w^{-s-2k+1}
  Real w2inv = Real(1) / sqr(w);
  Real p = w_negs / w;
  Real poch = s;
  Real dpoch = Real(1);  // derivative of (s)_1
  detail::DivergenceGuard guard("hurwitz_zeta_deriv");
  for (int k = 1;; ++k) {
    Real term = p * (dpoch - poch * lw) * detail::bernoulli_over_factorial(k);
    sum += term;
    if (detail::negligible(term, sum)) break;
    guard.check(term, k);
    Real f1 = s + (2 * k - 1);
    Real f2 = s + 2 * k;
    // (poch f1 f2)' = dpoch f1 f2 + poch (f1 + f2)
    dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
    poch = poch * f1 * f2;
    p *= w2inv;
  }
  return ensure_finite(sum, "hurwitz_zeta_deriv");
}

Real divisor_sigma(const Real& s, long n, const EvalContext& ctx) {
  if (n < 1) throw DomainError("divisor_sigma: n must be >= 1");
  PrecisionScope scope(ctx);
  Real sum;
  long si = 0;
  const bool is_int = detail::integer_exponent(s, si);
  auto term = [&](long d) { return is_int ? pow(Real(d), si) : pow(Real(d), s); };
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += term(d);
    if (d != n / d) sum += term(n / d);
  }
  return sum;
}

Complex divisor_sigma(const Complex& s, long n, const EvalContext& ctx) {
  if (s.is_real()) return Complex(divisor_sigma(s.re, n, ctx));
  if (n < 1) throw DomainError("divisor_sigma: n must be >= 1");
  PrecisionScope scope(ctx);
  Complex sum;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += exp(s * log(Real(d)));
    if (d != n / d) sum += exp(s * log(Real(n / d)));
  }
  return sum;
}

long divisor_count(long n) {
  if (n < 1) throw DomainError("divisor_count: n must be >= 1");
  long c = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    c += (d == n / d) ? 1 : 2;
  }
  return c;
}

Complex log_gamma(const Complex& z, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  return ensure_finite(detail::log_gamma(z, ctx.asymptotic_threshold()), "log_gamma");
}

Complex gamma(const Complex& z, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  if (z.is_real()) return Complex(ensure_finite(gamma(z.re), "gamma"));
  return ensure_finite(exp(detail::log_gamma(z, ctx.asymptotic_threshold())), "gamma");
}

}  // namespace plab
