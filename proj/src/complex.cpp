#include "plab/complex.hpp"

#include "plab/errors.hpp"

namespace plab {

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.im.is_zero()) return {a.re / b.re, a.im / b.re};
  Real d = sqr(b.re) + sqr(b.im);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
Complex operator+(const Real& a, const Complex& b) { return {a + b.re, b.im}; }
Complex operator-(const Real& a, const Complex& b) { return {a - b.re, -b.im}; }
Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }

Complex operator/(const Real& a, const Complex& b) {
  if (b.im.is_zero()) return {a / b.re, Real(0)};
  Real d = sqr(b.re) + sqr(b.im);
  return {a * b.re / d, -(a * b.im) / d};
}

bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real norm(const Complex& z) { return sqr(z.re) + sqr(z.im); }

Real arg(const Complex& z) {
  if (z.im.is_zero()) return z.re.sign() < 0 ? const_pi() : Real(0);
  return atan2(z.im, z.re);
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Complex sqr(const Complex& z) { return {sqr(z.re) - sqr(z.im), 2 * z.re * z.im}; }

Complex sqrt(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() >= 0) return {sqrt(z.re), Real(0)};
  Real r = abs(z);
  Real a = sqrt((r + abs(z.re)) / 2);
  if (z.re.sign() >= 0) return {a, z.im / (2 * a)};
  Real b = z.im.sign() < 0 ? -a : a;
  return {abs(z.im) / (2 * a), b};
}

Complex exp(const Complex& z) {
  if (z.im.is_zero()) return {exp(z.re), Real(0)};
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex expm1(const Complex& z) {
  if (z.im.is_zero()) return {expm1(z.re), Real(0)};
  // e^a cos b - 1 = expm1(a) cos b - 2 sin^2(b/2)
  Real em = expm1(z.re);
  Real c = cos(z.im);
  Real h = sin(z.im / 2);
  return {em * c - 2 * sqr(h), (em + 1) * sin(z.im)};
}

Complex log(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() > 0) return {log(z.re), Real(0)};
  return {log(norm(z)) / 2, arg(z)};
}

Complex pow(const Complex& z, const Complex& w) {
  if (z.re.is_zero() && z.im.is_zero()) {
    if (w.re.sign() > 0) return {};
    throw PoleError("pow: zero base with non-positive exponent");
  }
  return exp(w * log(z));
}

Complex pow(const Complex& z, const Real& w) {
  if (z.im.is_zero() && z.re.sign() > 0) return {pow(z.re, w), Real(0)};
  if (z.re.is_zero() && z.im.is_zero()) {
    if (w.sign() > 0) return {};
    throw PoleError("pow: zero base with non-positive exponent");
  }
  return exp(log(z) * w);
}

Complex pow(const Complex& z, long n) {
  if (z.im.is_zero()) return {pow(z.re, n), Real(0)};
  bool inv = n < 0;
  unsigned long e = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Complex acc(Real(1));
  Complex b = z;
  while (e != 0) {
    if (e & 1UL) acc = acc * b;
    e >>= 1;
    if (e != 0) b = sqr(b);
  }
  return inv ? Real(1) / acc : acc;
}

Complex sin(const Complex& z) { return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)}; }
Complex cos(const Complex& z) { return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))}; }

Complex cot(const Complex& z) {
  if (z.im.is_zero()) return {cot(z.re), Real(0)};
  // cot(a+ib) = (sin 2a - i sinh 2b) / (cosh 2b - cos 2a)
  Real a2 = 2 * z.re;
  Real b2 = 2 * z.im;
  Real d = cosh(b2) - cos(a2);
  return {sin(a2) / d, -sinh(b2) / d};
}

Complex expi(const Real& theta) { return {cos(theta), sin(theta)}; }
Complex mul_i(const Complex& z) { return {-z.im, z.re}; }

std::string to_string(const Complex& z, int digits) {
  if (z.im.is_zero()) return to_string(z.re, digits);
  std::string im = to_string(abs(z.im), digits);
  return to_string(z.re, digits) + (z.im.sign() < 0 ? " - " : " + ") + im + "i";
}

const Complex& ensure_finite(const Complex& z, const char* what) {
  ensure_finite(z.re, what);
  ensure_finite(z.im, what);
  return z;
}

}  // namespace plab
