#pragma once

#include "plab/real.hpp"

namespace plab {

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(const Real& r) : re(r) {}  // NOLINT: real values promote implicitly
  Complex(Real&& r) : re(std::move(r)) {}
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(Real&& r, Real&& i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i) : re(r), im(i) {}

  bool is_real() const { return im.is_zero(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
};

Complex operator-(const Complex& a);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator+(const Complex& a, const Real& b);
Complex operator-(const Complex& a, const Real& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator+(const Real& a, const Complex& b);
Complex operator-(const Real& a, const Complex& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Real& a, const Complex& b);

template <std::integral I>
Complex operator+(const Complex& a, I b) { return {a.re + b, a.im}; }
template <std::integral I>
Complex operator+(I a, const Complex& b) { return {b.re + a, b.im}; }
template <std::integral I>
Complex operator-(const Complex& a, I b) { return {a.re - b, a.im}; }
template <std::integral I>
Complex operator-(I a, const Complex& b) { return {a - b.re, -b.im}; }
template <std::integral I>
Complex operator*(const Complex& a, I b) { return {a.re * b, a.im * b}; }
template <std::integral I>
Complex operator*(I a, const Complex& b) { return {b.re * a, b.im * a}; }
template <std::integral I>
Complex operator/(const Complex& a, I b) { return {a.re / b, a.im / b}; }
template <std::integral I>
Complex operator/(I a, const Complex& b) { return Real(static_cast<long>(a)) / b; }
template <std::floating_point F>
Complex operator*(const Complex& a, F b) { return {a.re * b, a.im * b}; }
template <std::floating_point F>
Complex operator*(F a, const Complex& b) { return {b.re * a, b.im * a}; }

bool operator==(const Complex& a, const Complex& b);

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
// Principal argument in (-pi, pi]; a negative real axis point with a -0
// imaginary part still maps to +pi.
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex sqr(const Complex& z);
Complex sqrt(const Complex& z);
Complex exp(const Complex& z);
Complex expm1(const Complex& z);
Complex log(const Complex& z);
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Complex& z, const Real& w);
Complex pow(const Complex& z, long n);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex cot(const Complex& z);
// exp(i * theta)
Complex expi(const Real& theta);
Complex mul_i(const Complex& z);

// Real-valued overloads so templated kernels can use one spelling.
inline Real real_part(const Real& x) { return x; }
inline Real real_part(const Complex& z) { return z.re; }
inline Real imag_part(const Real&) { return Real(0); }
inline Real imag_part(const Complex& z) { return z.im; }
inline Real conj(const Real& x) { return x; }
inline Real arg_or_zero(const Real& x) { return x.sign() < 0 ? const_pi() : Real(0); }

std::string to_string(const Complex& z, int digits);

const Complex& ensure_finite(const Complex& z, const char* what);

}  // namespace plab
