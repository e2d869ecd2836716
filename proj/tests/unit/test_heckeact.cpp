#include "plab/heckeact.hpp"

#include <random>

#include "plab/eisenperiod.hpp"
#include "plab/errors.hpp"
#include "plab/numerics.hpp"
#include "plab/periodfn.hpp"
#include "support.hpp"

using namespace plab;
using plab::test::R;

namespace {

const EvalContext ctx(30);

IntMatrix2 M(long a, long b, long c, long d) { return {a, b, c, d}; }

// Brute-force count of the defining constraint set.
size_t count_hat(long n) {
  size_t k = 0;
  for (long a = 0; a <= n; ++a)
    for (long b = 0; b <= n; ++b)
      for (long c = 0; c < a; ++c)
        for (long d = b + 1; d <= n + b * c; ++d)
          if (a * d - b * c == n) ++k;
  return k;
}

}  // namespace

TEST_CASE("matrix sets") {
  HeckeElement h1 = hecke_hat(1);
  REQUIRE(h1.size() == 1);
  CHECK(h1.terms()[0].m.projectively_equal(M(1, 0, 0, 1)));
  HeckeElement h2 = hecke_hat(2);
  REQUIRE(h2.size() == 4);
  CHECK(h2.terms()[0].m.projectively_equal(M(1, 0, 0, 2)));
  CHECK(h2.terms()[1].m.projectively_equal(M(1, 1, 0, 2)));
  CHECK(h2.terms()[2].m.projectively_equal(M(2, 0, 0, 1)));
  CHECK(h2.terms()[3].m.projectively_equal(M(2, 0, 1, 1)));
  const size_t sizes[] = {1, 4, 7, 13, 15, 26};
  for (long n = 1; n <= 6; ++n) {
    CAPTURE(n);
    HeckeElement h = hecke_hat(n);
    CHECK(h.size() == sizes[n - 1]);
    CHECK(h.size() == count_hat(n));
    for (const auto& t : h.terms()) {
      CHECK(t.m.det() == n);
      CHECK(t.m.c < t.m.a);
      CHECK(t.m.b < t.m.d);
    }
  }
  CHECK(hecke_Tinfty(2).size() == 3);
  for (long p : {3, 5, 7, 11}) CHECK(hecke_Tinfty(p).size() == static_cast<size_t>(p + 1));
  CHECK(M(1, 2, 3, 4).projectively_equal(M(-1, -2, -3, -4)));
  CHECK_FALSE(M(1, 2, 3, 4).projectively_equal(M(-1, 2, 3, 4)));
  CHECK_THROWS_AS(hecke_hat(0), DomainError);
}

TEST_CASE("slash action") {
  PrecisionScope scope(ctx);
  ComplexFn f = [](const Complex& z) { return z * z + Real(3); };
  Complex x(R("0.4"), R("0.2"));
  CHECK_CLOSE(slash(f, R("2.5"), hecke_hat(1), x, ctx), f(x), 28);
  HeckeElement a(2, {{Rational(1), M(2, 0, 0, 1)}});
  CHECK_CLOSE(slash(f, Real(1), a, x, ctx), f(x * 2) * sqrt(Real(2)), 28);
  HeckeElement b(2, {{Rational(1), M(1, 1, 0, 2)}});
  CHECK_CLOSE(slash(f, Real(1), b, x, ctx), f((x + 1) / 2) * (sqrt(Real(2)) / 2), 28);
  HeckeElement c(1, {{Rational(1), M(0, -1, 1, 0)}});
  CHECK_THROWS_AS(slash(f, Real(1), c, Complex(Real(0)), ctx), PoleError);
}

TEST_CASE("F1 is a Hecke eigenfunction") {
  CHECK(eigen_residual_F1(1, R("0.3"), ctx) == 0);
  CHECK(eigen_residual_F1(2, Real(1), ctx) < R("1e-28"));
  CHECK(eigen_residual_F1(3, R("2.7"), ctx) < R("1e-25"));
  std::mt19937_64 rng(ctx.seed());
  std::uniform_real_distribution<double> dist(0.05, 8.0);
  for (long n = 2; n <= 6; ++n) {
    for (int i = 0; i < 4; ++i) {
      Real x(dist(rng));
      CAPTURE(n);
      CAPTURE(x.to_double());
      CHECK(eigen_residual_F1(n, x, ctx) < R("1e-25"));
    }
  }
}

TEST_CASE("psi_plus is a Hecke eigenform") {
  CHECK(eigen_residual_psi(1, R("1.25"), Real(2), ctx) == 0);
  CHECK(eigen_residual_psi(2, R("1.25"), R("1.3"), ctx) < R("1e-25"));
  CHECK(eigen_residual_psi(4, R("1.75"), R("0.6"), ctx) < R("1e-25"));
  for (const char* s : {"1.25", "1.75", "2.5", "0.8"}) {
    for (long n = 2; n <= 4; ++n) {
      CAPTURE(s);
      CAPTURE(n);
      CHECK(eigen_residual_psi(n, R(s), R("0.83"), ctx) < R("1e-25"));
    }
  }
}

TEST_CASE("cotangent function") {
  PrecisionScope scope(ctx);
  CHECK_CLOSE(script_C(R("0.25"), R("0.25"), ctx), Real(2), 28);
  CHECK(script_C(Real(3), R("0.37"), ctx) == 1);
  CHECK_CLOSE(script_C(R("0.5"), R("0.37"), ctx), Real(1), 28);
}

TEST_CASE("sign homomorphism") {
  CHECK(c_hom(M(1, 1, 0, 2)) == 0);
  CHECK(c_hom(M(1, -1, 1, 0)) == 2);
  CHECK(c_hom(M(0, -1, 1, 0)) == 2);
  CHECK(c_hom(M(1, 0, -1, 1)) == 0);
  CHECK(c_hom(M(-1, 0, 0, -1)) == 0);
  CHECK_THROWS_AS(c_hom(M(1, -1, -1, 1)), DomainError);
  for (long n = 1; n <= 6; ++n) CHECK(c_hom(hecke_hat(n)) == 0);
  // Additivity over formal sums.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> e(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<HeckeTerm> terms;
    long expect = 0;
    while (terms.size() < 3) {
      long a = e(rng), b = e(rng), c = e(rng);
      if (a == 0) continue;
      // Determinant 1: d = (1 + bc)/a.
      if ((1 + b * c) % a != 0) continue;
      IntMatrix2 m = M(a, b, c, (1 + b * c) / a);
      if (m.a + m.b == 0 && m.c + m.d == 0) continue;
      long coeff = e(rng);
      terms.push_back({Rational(coeff), m});
      expect += coeff * c_hom(m);
    }
    CHECK(c_hom(HeckeElement(1, terms)) == expect);
  }
}

TEST_CASE("cotangent identity") {
  CHECK(cot_identity_residual(1, R("0.21"), R("0.43"), ctx) == 0);
  CHECK(cot_identity_residual(3, R("1.21"), R("0.45"), ctx) < R("1e-27"));
  // x + y = 1 puts [1 1; 0 2] on a cotangent pole.
  CHECK_THROWS_AS(cot_identity_residual(2, R("0.3"), R("0.7"), ctx), PoleError);
  CHECK_THROWS_AS(cot_identity_residual(2, R("0.5"), R("0.3"), ctx), PoleError);
  CHECK(cot_identity_residual(1, Real(2), R("0.3"), ctx) == 0);
  std::mt19937_64 rng(ctx.seed());
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  int tested = 0;
  while (tested < 40) {
    Real x(dist(rng)), y(dist(rng));
    long n = 1 + tested % 4;
    try {
      Real r = cot_identity_residual(n, x, y, ctx);
      CAPTURE(n);
      CAPTURE(x.to_double());
      CAPTURE(y.to_double());
      CHECK(r < R("1e-25"));
      ++tested;
    } catch (const PoleError&) {
    }
  }
}
