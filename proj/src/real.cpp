#include "plab/real.hpp"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "plab/context.hpp"
#include "plab/errors.hpp"

namespace plab {

namespace {

thread_local long tls_bits = 128;

constexpr mpfr_rnd_t R = MPFR_RNDN;

}  // namespace

long working_bits() { return tls_bits; }

long digits_to_bits(int digits) {
  return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 8;
}

PrecisionScope::PrecisionScope(long bits) : saved_(tls_bits) { tls_bits = bits; }

PrecisionScope::PrecisionScope(const EvalContext& ctx) : saved_(tls_bits) {
  tls_bits = ctx.working_bits();
}

PrecisionScope::~PrecisionScope() { tls_bits = saved_; }

Real::Real() {
  mpfr_init2(v_, tls_bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(int v) {
  mpfr_init2(v_, tls_bits);
  mpfr_set_si(v_, v, R);
}

Real::Real(long v) {
  mpfr_init2(v_, tls_bits);
  mpfr_set_si(v_, v, R);
}

Real::Real(long long v) {
  mpfr_init2(v_, tls_bits);
  mpfr_set_sj(v_, static_cast<intmax_t>(v), R);
}

Real::Real(unsigned long v) {
  mpfr_init2(v_, tls_bits);
  mpfr_set_ui(v_, v, R);
}

Real::Real(double v) {
  mpfr_init2(v_, tls_bits);
  mpfr_set_d(v_, v, R);
}

Real::Real(const Integer& v) {
  mpfr_init2(v_, tls_bits);
  mpfr_set_z(v_, v.get_mpz_t(), R);
}

Real::Real(const Rational& v) {
  mpfr_init2(v_, tls_bits);
  mpfr_set_q(v_, v.get_mpq_t(), R);
}

Real::Real(std::string_view decimal) {
  mpfr_init2(v_, tls_bits);
  std::string s(decimal);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(v_, s.c_str(), &end, 10, R);
  if (s.empty() || end != s.c_str() + s.size()) {
    mpfr_clear(v_);
    throw ParseError("not a decimal number: '" + s + "'");
  }
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, R);
}

Real::Real(Real&& o) noexcept {
  std::memcpy(v_, o.v_, sizeof(mpfr_t));
  o.v_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    if (v_->_mpfr_d == nullptr) {
      mpfr_init2(v_, mpfr_get_prec(o.v_));
    } else {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    }
    mpfr_set(v_, o.v_, R);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
    std::memcpy(v_, o.v_, sizeof(mpfr_t));
    o.v_->_mpfr_d = nullptr;
  }
  return *this;
}

Real::~Real() {
  if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
}

// Compound assignment keeps the destination's precision.
Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, R);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, R);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(v_, v_, o.v_, R);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(v_, v_, o.v_, R);
  return *this;
}
Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, R);
  return *this;
}
Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, R);
  return *this;
}

Real RealAccess::with_precision(long bits) {
  Real r;
  if (mpfr_get_prec(r.v_) != bits) mpfr_set_prec(r.v_, bits);
  return r;
}

namespace {

bool reusable(const Real& a) { return a.precision() == tls_bits; }

}  // namespace

Real operator-(const Real& a) {
  Real r;
  mpfr_neg(r.get(), a.get(), R);
  return r;
}

#define PLAB_BINOP(OP, FN)                                   \
  Real operator OP(const Real& a, const Real& b) {           \
    Real r;                                                  \
    FN(r.get(), a.get(), b.get(), R);                        \
    return r;                                                \
  }                                                          \
  Real operator OP(Real&& a, const Real& b) {                \
    if (!reusable(a)) return static_cast<const Real&>(a) OP b; \
    FN(a.get(), a.get(), b.get(), R);                        \
    return std::move(a);                                     \
  }

PLAB_BINOP(+, mpfr_add)
PLAB_BINOP(-, mpfr_sub)
PLAB_BINOP(*, mpfr_mul)
PLAB_BINOP(/, mpfr_div)

#undef PLAB_BINOP

Real add_si(const Real& a, long b) {
  Real r;
  mpfr_add_si(r.get(), a.get(), b, R);
  return r;
}
Real mul_si(const Real& a, long b) {
  Real r;
  mpfr_mul_si(r.get(), a.get(), b, R);
  return r;
}
Real div_si(const Real& a, long b) {
  Real r;
  mpfr_div_si(r.get(), a.get(), b, R);
  return r;
}
Real si_div(long a, const Real& b) {
  Real r;
  mpfr_si_div(r.get(), a, b.get(), R);
  return r;
}
Real add_d(const Real& a, double b) {
  Real r;
  mpfr_add_d(r.get(), a.get(), b, R);
  return r;
}
Real mul_d(const Real& a, double b) {
  Real r;
  mpfr_mul_d(r.get(), a.get(), b, R);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  return mpfr_cmp(a.get(), b.get()) <=> 0;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

#define PLAB_UNARY(NAME, FN)     \
  Real NAME(const Real& x) {     \
    Real r;                      \
    FN(r.get(), x.get(), R);     \
    return r;                    \
  }

PLAB_UNARY(abs, mpfr_abs)
PLAB_UNARY(sqr, mpfr_sqr)
PLAB_UNARY(sqrt, mpfr_sqrt)
PLAB_UNARY(exp, mpfr_exp)
PLAB_UNARY(expm1, mpfr_expm1)
PLAB_UNARY(log, mpfr_log)
PLAB_UNARY(log1p, mpfr_log1p)
PLAB_UNARY(log10, mpfr_log10)
PLAB_UNARY(sin, mpfr_sin)
PLAB_UNARY(cos, mpfr_cos)
PLAB_UNARY(tan, mpfr_tan)
PLAB_UNARY(cot, mpfr_cot)
PLAB_UNARY(sinh, mpfr_sinh)
PLAB_UNARY(cosh, mpfr_cosh)
PLAB_UNARY(tanh, mpfr_tanh)
PLAB_UNARY(atan, mpfr_atan)
PLAB_UNARY(gamma, mpfr_gamma)

#undef PLAB_UNARY

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.get(), x.get());
  return r;
}
Real ceil(const Real& x) {
  Real r;
  mpfr_ceil(r.get(), x.get());
  return r;
}
Real round(const Real& x) {
  Real r;
  mpfr_round(r.get(), x.get());
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.get(), x.get(), y.get(), R);
  return r;
}
Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, R);
  return r;
}
Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), R);
  return r;
}
Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.get(), x.get(), y.get(), R);
  return r;
}
Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.get(), x.get(), e, R);
  return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real const_pi() {
  Real r;
  mpfr_const_pi(r.get(), R);
  return r;
}
Real const_euler() {
  Real r;
  mpfr_const_euler(r.get(), R);
  return r;
}
Real const_log2() {
  Real r;
  mpfr_const_log2(r.get(), R);
  return r;
}
Real epsilon() {
  Real r(1);
  mpfr_mul_2si(r.get(), r.get(), -tls_bits, R);
  return r;
}

std::string to_string(const Real& x, int digits) {
  if (mpfr_zero_p(x.get())) {
    return digits > 1 ? "0." + std::string(static_cast<size_t>(digits - 1), '0') : "0";
  }
  if (!mpfr_number_p(x.get())) return mpfr_nan_p(x.get()) ? "nan" : (x.sign() > 0 ? "inf" : "-inf");
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x.get(), R);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // mant holds `digits` digits d1 d2 ... with value 0.d1d2... * 10^e.
  std::string out;
  if (e > 0 && e <= digits) {
    out = mant.substr(0, static_cast<size_t>(e));
    if (static_cast<size_t>(e) < mant.size()) out += "." + mant.substr(static_cast<size_t>(e));
  } else if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
  }
  return sign + out;
}

std::string to_sci(const Real& x, int digits) {
  if (mpfr_zero_p(x.get())) return "0";
  std::vector<char> buf(64 + static_cast<size_t>(digits));
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, x.get());
  return std::string(buf.data());
}

const Real& ensure_finite(const Real& x, const char* what) {
  if (!x.is_finite()) throw OverflowError(std::string(what) + ": result is not finite");
  return x;
}

}  // namespace plab
