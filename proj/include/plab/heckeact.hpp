#pragma once

#include <functional>
#include <string>
#include <vector>

#include "plab/complex.hpp"
#include "plab/context.hpp"

namespace plab {

struct IntMatrix2 {
  Integer a, b, c, d;

  Integer det() const { return a * d - b * c; }
  // Equality in PGL2: M and -M are identified.
  bool projectively_equal(const IntMatrix2& o) const;
  std::string to_string() const;
};

struct HeckeTerm {
  Rational coeff;
  IntMatrix2 m;
};

// Formal Q-linear combination of integer matrices of determinant n.
class HeckeElement {
 public:
  HeckeElement(long n, std::vector<HeckeTerm> terms);

  long n() const { return n_; }
  const std::vector<HeckeTerm>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

 private:
  long n_;
  std::vector<HeckeTerm> terms_;
};

// [a b; c d] with 0 <= c < a, 0 <= b < d, ad - bc = n, ordered by (a, b, c, d).
HeckeElement hecke_hat(long n);
// sum over ad = n, 0 <= b < d of [a b; 0 d].
HeckeElement hecke_Tinfty(long n);

using ComplexFn = std::function<Complex(const Complex&)>;

// sum coeff * n^(k/2) (cx + d)^(-k) f((ax + b)/(cx + d))
Complex slash(const ComplexFn& f, const Real& k, const HeckeElement& h, const Complex& x,
              const EvalContext& ctx);

// |(F1 |_1 T_n)(x) - sqrt(n) d(n) F1(x)|
Real eigen_residual_F1(long n, const Real& x, const EvalContext& ctx);
// |(psi_s^+ |_2s T_n)(x) - n^s sigma_{1-2s}(n) psi_s^+(x)|
Real eigen_residual_psi(long n, const Real& s, const Real& x, const EvalContext& ctx);

// cot(pi x) cot(pi y) + 1, where cot is replaced by 0 at integers.
Real script_C(const Real& x, const Real& y, const EvalContext& ctx);

// The sign homomorphism on generators; DomainError when a+b = c+d = 0.
long c_hom(const IntMatrix2& m);
// Extended linearly; the coefficients must make the result an integer.
Integer c_hom(const HeckeElement& h);

// |(C o T_n)(x, y) - sum_{l | n} l C(lx, ly) - c(T_n)| with the two-variable
// action (C o M)(x, y) = C(ax + by, cx + dy).  PoleError if any cotangent
// argument lies within 1e-3 of an integer,
// exact integers included.
Real cot_identity_residual(long n, const Real& x, const Real& y, const EvalContext& ctx);

}  // namespace plab
