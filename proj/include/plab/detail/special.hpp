#pragma once

// Precision-agnostic kernels shared by the function modules.  They run at the
// calling thread's working precision; `thr` is the asymptotic threshold.
// Instantiated for T = Real and T = Complex.

#include <climits>

#include "plab/complex.hpp"

namespace plab::detail {

// B_n as a Real at the current working precision (thread-local cache).
const Real& bernoulli_real(int n);
// B_{2k} / (2k)! at the current working precision.
const Real& bernoulli_over_factorial(int k);

// Binary exponent of the value (max over parts); LONG_MIN for zero.
long mag(const Real& x);
long mag(const Complex& z);
// |term| < 2^-bits * |scale|, judged by exponents.
template <class T, class U>
bool negligible(const T& term, const U& scale) {
  long t = mag(term);
  if (t == LONG_MIN) return true;
  long s = mag(scale);
  if (s == LONG_MIN) return false;
  return t < s - working_bits();
}

bool is_nonpositive_integer(const Real& x);
bool is_nonpositive_integer(const Complex& z);

template <class T>
T digamma(const T& z, double thr);
// psi(z) - log z + 1/(2z), computed without the cancellation for large |z|.
template <class T>
T digamma_remainder(const T& z, double thr);
template <class T>
T polygamma(int m, const T& z, double thr);
template <class T>
T hurwitz_zeta(const T& s, const T& a, double thr);
// zeta(s, a) - a^(1-s)/(s-1) - a^(-s)/2.
template <class T>
T hurwitz_remainder(const T& s, const T& a, double thr);
template <class T>
T riemann_zeta(const T& s, double thr);
Complex log_gamma(const Complex& z, double thr);

}  // namespace plab::detail
