#pragma once

#include <cstdint>
#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace plab {

class EvalContext;

using Rational = mpq_class;
using Integer = mpz_class;

// Working precision in bits for values created on this thread.
long working_bits();
long digits_to_bits(int digits);

// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  explicit PrecisionScope(const EvalContext& ctx);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(long long v);
  Real(unsigned long v);
  Real(double v);
  explicit Real(const Integer& v);
  explicit Real(const Rational& v);
  // Decimal literal ("1.25", "-3e-4", "7/3" is not accepted here).
  explicit Real(std::string_view decimal);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long precision() const { return mpfr_get_prec(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

 private:
  friend class RealAccess;
  mpfr_t v_;
};

// Raw construction helper used by the operator implementations.
class RealAccess {
 public:
  static Real with_precision(long bits);
};

Real operator-(const Real& a);
Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(Real&& a, const Real& b);
Real operator-(Real&& a, const Real& b);
Real operator*(Real&& a, const Real& b);
Real operator/(Real&& a, const Real& b);

Real add_si(const Real& a, long b);
Real mul_si(const Real& a, long b);
Real div_si(const Real& a, long b);
Real si_div(long a, const Real& b);
Real add_d(const Real& a, double b);
Real mul_d(const Real& a, double b);

template <std::integral I>
Real operator+(const Real& a, I b) { return add_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator+(I a, const Real& b) { return add_si(b, static_cast<long>(a)); }
template <std::integral I>
Real operator-(const Real& a, I b) { return add_si(a, -static_cast<long>(b)); }
template <std::integral I>
Real operator-(I a, const Real& b) { return add_si(-b, static_cast<long>(a)); }
template <std::integral I>
Real operator*(const Real& a, I b) { return mul_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator*(I a, const Real& b) { return mul_si(b, static_cast<long>(a)); }
template <std::integral I>
Real operator/(const Real& a, I b) { return div_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator/(I a, const Real& b) { return si_div(static_cast<long>(a), b); }

template <std::floating_point F>
Real operator+(const Real& a, F b) { return add_d(a, static_cast<double>(b)); }
template <std::floating_point F>
Real operator+(F a, const Real& b) { return add_d(b, static_cast<double>(a)); }
template <std::floating_point F>
Real operator-(const Real& a, F b) { return add_d(a, -static_cast<double>(b)); }
template <std::floating_point F>
Real operator-(F a, const Real& b) { return add_d(-b, static_cast<double>(a)); }
template <std::floating_point F>
Real operator*(const Real& a, F b) { return mul_d(a, static_cast<double>(b)); }
template <std::floating_point F>
Real operator*(F a, const Real& b) { return mul_d(b, static_cast<double>(a)); }
template <std::floating_point F>
Real operator/(const Real& a, F b) { return a / Real(static_cast<double>(b)); }
template <std::floating_point F>
Real operator/(F a, const Real& b) { return Real(static_cast<double>(a)) / b; }

// Rvalue left operands with a builtin right operand; without these the
// (Real&&, const Real&) overloads tie with the templates above.
template <std::integral I>
Real operator+(Real&& a, I b) { return add_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator-(Real&& a, I b) { return add_si(a, -static_cast<long>(b)); }
template <std::integral I>
Real operator*(Real&& a, I b) { return mul_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator/(Real&& a, I b) { return div_si(a, static_cast<long>(b)); }
template <std::floating_point F>
Real operator+(Real&& a, F b) { return add_d(a, static_cast<double>(b)); }
template <std::floating_point F>
Real operator-(Real&& a, F b) { return add_d(a, -static_cast<double>(b)); }
template <std::floating_point F>
Real operator*(Real&& a, F b) { return mul_d(a, static_cast<double>(b)); }
template <std::floating_point F>
Real operator/(Real&& a, F b) { return a / Real(static_cast<double>(b)); }

std::partial_ordering operator<=>(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
template <std::integral I>
std::partial_ordering operator<=>(const Real& a, I b) {
  return mpfr_cmp_si(a.get(), static_cast<long>(b)) <=> 0;
}
template <std::integral I>
bool operator==(const Real& a, I b) { return mpfr_cmp_si(a.get(), static_cast<long>(b)) == 0; }
template <std::floating_point F>
std::partial_ordering operator<=>(const Real& a, F b) {
  return mpfr_cmp_d(a.get(), static_cast<double>(b)) <=> 0;
}
template <std::floating_point F>
bool operator==(const Real& a, F b) { return mpfr_cmp_d(a.get(), static_cast<double>(b)) == 0; }

Real abs(const Real& x);
Real sqr(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log10(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real cot(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real floor(const Real& x);
Real ceil(const Real& x);
Real round(const Real& x);
Real hypot(const Real& x, const Real& y);
Real gamma(const Real& x);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real const_pi();
Real const_euler();
Real const_log2();
// 2^-working_bits: unit roundoff at the current precision.
Real epsilon();

// Decimal rendering with `digits` significant digits, trailing zeros kept.
std::string to_string(const Real& x, int digits);
// Short scientific rendering used for residual columns.
std::string to_sci(const Real& x, int digits = 3);

// Throws OverflowError unless x is a finite number.
const Real& ensure_finite(const Real& x, const char* what);

}  // namespace plab
