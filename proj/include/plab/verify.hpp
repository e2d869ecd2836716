#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "plab/context.hpp"
#include "plab/real.hpp"

namespace plab {

enum class GridKind { real_positive, complex_offcut, upper_half };

GridKind parse_grid_kind(const std::string& name);

// Deterministic sample points from mt19937_64:
//   real_positive   log-uniform in [0.05, 20] (imaginary part 0)
//   complex_offcut  modulus log-uniform in [0.05, 20], |arg| <= 3
//   upper_half      Re in [-1/2, 1/2], Im in [1/2, 3]
std::vector<std::complex<double>> grid(std::uint64_t seed, int count, GridKind kind);

// -pi^(-3/2) integral_0^inf |Xi(t/2) Gamma((-1+it)/4)|^2 cos(t log(x) / 2) / (1 + t^2) dt
Real xi_integral(const Real& x, const EvalContext& ctx);
// sqrt(x) {(gamma - log(2 pi x)) / (2x) + frak_F1(x)}
Real xi_left_member(const Real& x, const EvalContext& ctx);

struct CaseResult {
  std::string id;
  std::vector<std::pair<std::string, std::string>> inputs;
  Real residual;
  Real tolerance;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int precision = 0;
  std::vector<CaseResult> cases;
  bool pass = true;
  double elapsed_ms = 0;

  // Stable key order; elapsed_ms is left out when timing is false so that
  // repeated runs compare byte for byte.
  std::string to_json(bool timing = true) const;
  std::string to_text() const;
  std::string to_csv() const;
};

const std::vector<std::string>& suite_names();

// points <= 0 uses each suite's default grid size.  UnknownSuite on a bad name.
SuiteReport run_suite(const std::string& name, const EvalContext& ctx, int points = 0);

}  // namespace plab
