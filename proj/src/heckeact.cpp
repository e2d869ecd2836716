#include "plab/heckeact.hpp"

#include <sstream>
#include <type_traits>

#include "plab/eisenperiod.hpp"
#include "plab/errors.hpp"
#include "plab/numerics.hpp"
#include "plab/parallel.hpp"
#include "plab/periodfn.hpp"

namespace plab {

namespace {

int sgn_of(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

Real to_real(const Integer& v) { return Real(v); }

// Value type for the real-axis slash used by the residual checks.
template <class T, class F>
T slash_generic(const F& f, const Real& k, const HeckeElement& h, const T& x, const EvalContext& ctx) {
  const auto& terms = h.terms();
  const long count = static_cast<long>(terms.size());
  PrecisionScope scope(ctx);
  const Real nk = pow(Real(h.n()), k / 2);
  T sum = sum_terms<T>(
      0, count,
      [&](long i) -> T {
        const HeckeTerm& t = terms[static_cast<size_t>(i)];
        T den = x * to_real(t.m.c) + to_real(t.m.d);
        if (den == T{}) throw PoleError("slash: cx + d vanishes");
        T image = (x * to_real(t.m.a) + to_real(t.m.b)) / den;
        T fv = f(image);
        T weight;
        if constexpr (std::is_same_v<T, Real>) {
          weight = pow(den, -k);
        } else {
          weight = exp(log(den) * (-k));
        }
        return fv * weight * Real(t.coeff);
      },
      ctx.exec());
  return sum * nk;
}

// cot(pi x), replaced by 0 at integers.
Real cot_C(const Real& x) {
  if (x.is_integer()) return Real(0);
  return cot(const_pi() * x);
}

// Integer arguments count as poles too: the identity fails there even with C = 0.
void require_off_pole(const Real& v) {
  if (abs(v - round(v)) < 1e-3) {
    throw PoleError("cot_identity_residual: argument within 1e-3 of a cotangent pole");
  }
}

}  // namespace

bool IntMatrix2::projectively_equal(const IntMatrix2& o) const {
  if (a == o.a && b == o.b && c == o.c && d == o.d) return true;
  return a == -o.a && b == -o.b && c == -o.c && d == -o.d;
}

std::string IntMatrix2::to_string() const {
  std::ostringstream os;
  os << '[' << a << ' ' << b << "; " << c << ' ' << d << ']';
  return os.str();
}

HeckeElement::HeckeElement(long n, std::vector<HeckeTerm> terms) : n_(n), terms_(std::move(terms)) {
  if (n < 1) throw DomainError("HeckeElement: grade must be >= 1");
  if (terms_.empty()) throw DomainError("HeckeElement: empty combination");
  for (const auto& t : terms_) {
    if (t.m.det() != n) throw DomainError("HeckeElement: " + t.m.to_string() + " does not have determinant " + std::to_string(n));
  }
}

HeckeElement hecke_hat(long n) {
  if (n < 1) throw DomainError("hecke_hat: n must be >= 1");
  std::vector<HeckeTerm> out;
  // c < a and b < d with ad - bc = n force a, d <= n.
  for (long a = 1; a <= n; ++a) {
    for (long b = 0; b < n; ++b) {
      for (long c = 0; c < a; ++c) {
        // ad = n + bc
        const long num = n + b * c;
        if (num % a != 0) continue;
        const long d = num / a;
        if (b < d) out.push_back({Rational(1), {a, b, c, d}});
      }
    }
  }
  return HeckeElement(n, std::move(out));
}

HeckeElement hecke_Tinfty(long n) {
  if (n < 1) throw DomainError("hecke_Tinfty: n must be >= 1");
  std::vector<HeckeTerm> out;
  for (long a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const long d = n / a;
    for (long b = 0; b < d; ++b) out.push_back({Rational(1), {a, b, 0, d}});
  }
  return HeckeElement(n, std::move(out));
}

Complex slash(const ComplexFn& f, const Real& k, const HeckeElement& h, const Complex& x,
              const EvalContext& ctx) {
  return slash_generic<Complex>(f, k, h, x, ctx);
}

Real eigen_residual_F1(long n, const Real& x, const EvalContext& ctx) {
  if (x.sign() <= 0) throw DomainError("eigen_residual_F1: x must be positive");
  HeckeElement h = hecke_hat(n);
  if (n == 1) return Real(0);
  auto f = [&](const Real& t) { return F1(t, ctx); };
  Real lhs = slash_generic<Real>(f, Real(1), h, x, ctx);
  Real fx = F1(x, ctx);
  PrecisionScope scope(ctx);
  return abs(lhs - sqrt(Real(n)) * divisor_count(n) * fx);
}

Real eigen_residual_psi(long n, const Real& s, const Real& x, const EvalContext& ctx) {
  if (x.sign() <= 0) throw DomainError("eigen_residual_psi: x must be positive");
  HeckeElement h = hecke_hat(n);
  if (n == 1) return Real(0);
  auto f = [&](const Real& t) { return psi_plus(s, t, ctx); };
  Real k;
  {
    PrecisionScope scope(ctx);
    k = s * 2;
  }
  Real lhs = slash_generic<Real>(f, k, h, x, ctx);
  Real fx = psi_plus(s, x, ctx);
  Real sigma;
  {
    PrecisionScope scope(ctx);
    sigma = divisor_sigma(Real(1 - k), n, ctx);
  }
  PrecisionScope scope(ctx);
  return abs(lhs - pow(Real(n), s) * sigma * fx);
}

Real script_C(const Real& x, const Real& y, const EvalContext& ctx) {
  PrecisionScope scope(ctx);
  return cot_C(x) * cot_C(y) + 1;
}

long c_hom(const IntMatrix2& m) {
  const Integer ab = m.a + m.b;
  const Integer cd = m.c + m.d;
  const int s_ab = sgn_of(ab);
  const int s_cd = sgn_of(cd);
  if (s_ab != 0 && s_cd != 0) return 1 - s_ab * s_cd;
  if (s_ab != 0) return 1 - s_ab * sgn_of(m.d);
  if (s_cd != 0) return 1 - sgn_of(m.b) * s_cd;
  throw DomainError("c_hom: undefined when a + b = 0 and c + d = 0");
}

Integer c_hom(const HeckeElement& h) {
  Rational sum(0);
  for (const auto& t : h.terms()) sum += t.coeff * c_hom(t.m);
  sum.canonicalize();
  if (sum.get_den() != 1) throw DomainError("c_hom: combination has a non-integer value");
  return sum.get_num();
}

Real cot_identity_residual(long n, const Real& x, const Real& y, const EvalContext& ctx) {
  HeckeElement h = hecke_hat(n);
  if (n == 1) return Real(0);
  PrecisionScope scope(ctx);
  auto C2 = [&](const Real& u, const Real& v) {
    require_off_pole(u);
    require_off_pole(v);
    return cot_C(u) * cot_C(v) + 1;
  };
  Real lhs;
  for (const auto& t : h.terms()) {
    Real u = x * Real(t.m.a) + y * Real(t.m.b);
    Real v = x * Real(t.m.c) + y * Real(t.m.d);
    lhs += Real(t.coeff) * C2(u, v);
  }
  Real rhs;
  for (long l = 1; l <= n; ++l) {
    if (n % l == 0) rhs += C2(x * l, y * l) * l;
  }
  Real c(c_hom(h));
  return abs(lhs - rhs - c);
}

}  // namespace plab
