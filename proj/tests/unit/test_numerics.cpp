#include "plab/numerics.hpp"

#include "plab/detail/special.hpp"
#include "plab/errors.hpp"
#include "support.hpp"

using namespace plab;
using plab::test::R;

namespace {

const EvalContext ctx(40);

Real mpfr_ref(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const Real& x) {
  Real r;
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(20) == Rational(-174611, 330));
  CHECK(zeta_neg_int(1) == Rational(-1, 2));
  CHECK(zeta_neg_int(2) == Rational(-1, 12));
  CHECK(zeta_neg_int(4) == Rational(1, 120));
  CHECK(zeta_neg_int(3) == 0);
  CHECK_THROWS_AS(bernoulli(-1), DomainError);
}

TEST_CASE("digamma against closed forms and MPFR") {
  PrecisionScope scope(ctx);
  Real g = const_euler();
  CHECK_CLOSE(digamma(Real(1), ctx), -g, 38);
  CHECK_CLOSE(digamma(R("0.5"), ctx), -g - 2 * const_log2(), 38);
  for (const char* s : {"0.05", "0.7", "3.25", "17.5", "123.456", "-2.5", "-0.3"}) {
    Real x = R(s);
    CHECK_CLOSE(digamma(x, ctx), mpfr_ref(mpfr_digamma, x), 37);
  }
  CHECK_THROWS_AS(digamma(Real(-3), ctx), PoleError);
  CHECK_THROWS_AS(digamma(Real(0), ctx), PoleError);
}

TEST_CASE("complex digamma") {
  PrecisionScope scope(ctx);
  Real pi = const_pi();
  // Im psi(i y) = 1/(2y) + (pi/2) coth(pi y)
  for (const char* s : {"0.3", "1", "4.5", "40"}) {
    Real y = R(s);
    Complex v = digamma(Complex(Real(0), y), ctx);
    CHECK_CLOSE(v.im, Real(1) / (2 * y) + pi / 2 / tanh(pi * y), 37);
  }
  // Real axis agrees with the real path.
  Complex c = digamma(Complex(R("2.75")), ctx);
  CHECK_CLOSE(c.re, digamma(R("2.75"), ctx), 38);
  // Recurrence psi(z+1) = psi(z) + 1/z off the axis.
  Complex z(R("-1.3"), R("0.4"));
  CHECK_CLOSE(digamma(Complex(z + 1), ctx), digamma(z, ctx) + Real(1) / z, 37);
}

TEST_CASE("polygamma") {
  PrecisionScope scope(ctx);
  Real pi = const_pi();
  CHECK_CLOSE(polygamma(1, Real(1), ctx), sqr(pi) / 6, 38);
  CHECK_CLOSE(polygamma(1, R("0.5"), ctx), sqr(pi) / 2, 38);
  CHECK_CLOSE(polygamma(2, Real(1), ctx), -2 * mpfr_ref(mpfr_zeta, Real(3)), 38);
  CHECK_CLOSE(polygamma(3, Real(1), ctx), pow(pi, 4L) / 15, 37);
  // psi^(m)(z+1) = psi^(m)(z) + (-1)^(m+1) m! z^(-m-1)
  Real x = R("0.37");
  CHECK_CLOSE(polygamma(2, Real(x + 1), ctx), polygamma(2, x, ctx) + 2 * pow(x, -3L), 36);
  Complex z(R("0.5"), R("2"));
  CHECK_CLOSE(polygamma(1, Complex(z + 1), ctx), polygamma(1, z, ctx) - pow(z, -2L), 37);
  CHECK_THROWS_AS(polygamma(0, x, ctx), DomainError);
}

TEST_CASE("riemann and hurwitz zeta") {
  PrecisionScope scope(ctx);
  Real pi = const_pi();
  CHECK_CLOSE(riemann_zeta(Real(2), ctx), sqr(pi) / 6, 38);
  CHECK_CLOSE(riemann_zeta(Real(0), ctx), R("-0.5"), 38);
  CHECK_CLOSE(riemann_zeta(Real(-1), ctx), Real(-1) / 12, 38);
  CHECK(riemann_zeta(Real(-2), ctx).is_zero());
  for (const char* s : {"0.5", "1.0001", "3.3", "-1.5", "-7.25", "25"}) {
    Real x = R(s);
    CHECK_CLOSE(riemann_zeta(x, ctx), mpfr_ref(mpfr_zeta, x), 36);
  }
  CHECK_CLOSE(hurwitz_zeta(Real(2), R("0.5"), ctx), sqr(pi) / 2, 38);
  Real s = R("2.7"), a = R("0.31");
  CHECK_CLOSE(hurwitz_zeta(s, a, ctx) - hurwitz_zeta(s, Real(a + 1), ctx), pow(a, -s), 37);
  CHECK_THROWS_AS(hurwitz_zeta(Real(1), a, ctx), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(s, Real(-1), ctx), DomainError);
}

TEST_CASE("complex zeta") {
  PrecisionScope scope(ctx);
  // First nontrivial zero.
  Complex rho(R("0.5"), R("14.134725141734693790457251983562470270784"));
  CHECK(abs(riemann_zeta(rho, ctx)) < R("1e-36"));
  Complex s(R("-1.5"), R("2"));
  // Reflection path agrees with the Hurwitz path on the real axis...
  CHECK_CLOSE(riemann_zeta(Complex(R("-2.5")), ctx).re, riemann_zeta(R("-2.5"), ctx), 37);
  // ...and conjugation symmetry holds off it.
  CHECK_CLOSE(riemann_zeta(conj(s), ctx), conj(riemann_zeta(s, ctx)), 36);
  Complex a(R("0.8"), R("0.3"));
  Complex sh(R("3"), R("1"));
  CHECK_CLOSE(hurwitz_zeta(sh, a, ctx) - hurwitz_zeta(sh, Complex(a + 1), ctx),
              exp(-(sh * log(a))), 37);
}

TEST_CASE("hurwitz zeta derivative") {
  PrecisionScope scope(ctx);
  Real pi = const_pi();
  Real g = const_euler();
  // zeta'(2) = pi^2/6 (gamma + log 2 pi - 12 log A); use zeta'(0) = -log(2 pi)/2 instead.
  CHECK_CLOSE(hurwitz_zeta_deriv(Real(0), Real(1), ctx), -log(2 * pi) / 2, 37);
  // d/ds zeta(s, a) at s = 0 is log Gamma(a) - log(2 pi)/2.
  Real a = R("0.3");
  CHECK_CLOSE(hurwitz_zeta_deriv(Real(0), a, ctx), log(gamma(a)) - log(2 * pi) / 2, 37);
  // Central difference at a generic point.
  Real s = R("3.4"), h = R("1e-12");
  Real fd = (hurwitz_zeta(Real(s + h), a, ctx) - hurwitz_zeta(Real(s - h), a, ctx)) / (2 * h);
  CHECK_CLOSE(hurwitz_zeta_deriv(s, a, ctx), fd, 20);
  (void)g;
}

TEST_CASE("log gamma") {
  PrecisionScope scope(ctx);
  Real pi = const_pi();
  // |Gamma(iy)|^2 = pi / (y sinh(pi y))
  Real y = R("2.5");
  Complex lg = log_gamma(Complex(Real(0), y), ctx);
  CHECK_CLOSE(2 * lg.re, log(pi / (y * sinh(pi * y))), 37);
  Complex z(R("-2.3"), R("0.7"));
  Complex ratio = exp(log_gamma(Complex(z + 1), ctx) - log_gamma(z, ctx));
  CHECK_CLOSE(ratio, z, 36);
  CHECK_CLOSE(gamma(Complex(R("4.5")), ctx).re, gamma(R("4.5")), 38);
  CHECK_THROWS_AS(log_gamma(Complex(Real(-2)), ctx), PoleError);
}

TEST_CASE("divisor functions") {
  PrecisionScope scope(ctx);
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(36) == 9);
  CHECK_CLOSE(divisor_sigma(Real(1), 12, ctx), Real(28), 38);
  CHECK_CLOSE(divisor_sigma(Real(-1), 6, ctx), Real(2), 38);
  Complex sig = divisor_sigma(Complex(Real(0), Real(1)), 4, ctx);
  Real l2 = const_log2();
  CHECK_CLOSE(sig, Complex(1 + cos(l2) + cos(2 * l2), sin(l2) + sin(2 * l2)), 38);
}

TEST_CASE("digamma remainder off the positive axis") {
  PrecisionScope scope(ctx);
  const double thr = ctx.asymptotic_threshold();
  for (auto z : {Complex(R("-3.3"), R("0.7")), Complex(R("0.2"), R("5")), Complex(R("-0.4"), R("-2")),
                 Complex(R("-12.5"), R("-0.25")), Complex(R("4"), R("1"))}) {
    Complex direct = digamma(z, ctx) - log(z) + Real(1) / (z * 2);
    CHECK_CLOSE(detail::digamma_remainder(z, thr), direct, 36);
  }
  // Large |z| in the left half plane: the remainder tracks -1/(12 z^2).
  Complex z(R("-4000"), R("30"));
  Complex r = detail::digamma_remainder(z, thr);
  CHECK(abs(r * sqr(z) * 12 + 1) < R("1e-6"));
  // Reflection route against the direct formula where the latter is still accurate.
  Complex z2(R("-40"), R("3"));
  CHECK_CLOSE(detail::digamma_remainder(z2, thr), digamma(z2, ctx) - log(z2) + Real(1) / (z2 * 2), 36);
}
