#pragma once

#include <doctest.h>

#include <string>

#include "plab/complex.hpp"
#include "plab/real.hpp"

namespace plab::test {

// |a - b| <= tol * max(1, |b|)
inline bool close(const Real& a, const Real& b, const Real& tol) {
  Real scale = max(Real(1), abs(b));
  return abs(a - b) <= tol * scale;
}

inline bool close(const Complex& a, const Complex& b, const Real& tol) {
  Real scale = max(Real(1), abs(b));
  return abs(a - b) <= tol * scale;
}

inline Real tol_digits(int d) { return pow(Real(10), -static_cast<long>(d)); }

inline Real R(const char* s) { return Real(std::string_view(s)); }

}  // namespace plab::test

#define CHECK_CLOSE(a, b, d)                                                              \
  do {                                                                                   \
    auto check_close_a_ = (a);                                                           \
    auto check_close_b_ = (b);                                                           \
    INFO("got " << plab::to_string(check_close_a_, 40) << " want "                       \
                << plab::to_string(check_close_b_, 40));                                 \
    CHECK(plab::test::close(check_close_a_, check_close_b_, plab::test::tol_digits(d))); \
  } while (0)
