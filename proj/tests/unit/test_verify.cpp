#include "plab/verify.hpp"

#include <json.hpp>

#include "plab/errors.hpp"
#include "support.hpp"

using namespace plab;
using plab::test::R;

TEST_CASE("grids are deterministic and in range") {
  auto a = grid(7, 40, GridKind::complex_offcut);
  auto b = grid(7, 40, GridKind::complex_offcut);
  CHECK(a == b);
  CHECK(a != grid(8, 40, GridKind::complex_offcut));
  for (auto z : a) {
    CHECK(std::abs(z) >= 0.05 - 1e-12);
    CHECK(std::abs(z) <= 20 + 1e-12);
    CHECK(std::abs(std::arg(z)) <= 3.0);
  }
  for (auto z : grid(7, 40, GridKind::real_positive)) {
    CHECK(z.imag() == 0);
    CHECK(z.real() >= 0.05 - 1e-12);
    CHECK(z.real() <= 20 + 1e-12);
  }
  for (auto z : grid(7, 40, GridKind::upper_half)) {
    CHECK(std::abs(z.real()) <= 0.5);
    CHECK(z.imag() >= 0.5);
    CHECK(z.imag() <= 3.0);
  }
  CHECK(parse_grid_kind("upper-half") == GridKind::upper_half);
  CHECK_THROWS_AS(parse_grid_kind("disk"), ParseError);
}

TEST_CASE("xi integral") {
  const EvalContext ctx(20);
  // Frozen from an mpmath quadrature of the same integrand at 40 digits.
  CHECK_CLOSE(xi_integral(Real(1), ctx), R("-0.760661401507812622954"), 15);
  CHECK_CLOSE(xi_left_member(Real(1), ctx), R("-0.760661401507812622954"), 18);
  CHECK_CLOSE(xi_left_member(Real(2), ctx), R("-0.738515412219056230461985177819"), 18);
  CHECK_CLOSE(xi_left_member(Real(0.5), ctx), R("-0.738515412219056230461985177819"), 18);
}

TEST_CASE("suite reports") {
  const EvalContext ctx(30);
  SuiteReport r = run_suite("eisen", ctx);
  CHECK(r.pass);
  CHECK(r.precision == 30);
  CHECK(r.seed == 42);
  CHECK(!r.cases.empty());

  // Each mode repeats byte for byte.  Across modes only the summation order
  // differs, so verdicts match and residuals stay at rounding level.
  SuiteReport s = run_suite("eisen", ctx.with_exec(Exec::serial));
  CHECK(run_suite("eisen", ctx).to_json(false) == r.to_json(false));
  CHECK(run_suite("eisen", ctx.with_exec(Exec::serial)).to_json(false) == s.to_json(false));
  REQUIRE(s.cases.size() == r.cases.size());
  for (size_t i = 0; i < r.cases.size(); ++i) {
    CHECK(r.cases[i].id == s.cases[i].id);
    CHECK(r.cases[i].pass == s.cases[i].pass);
    CHECK(abs(r.cases[i].residual - s.cases[i].residual) < r.cases[i].tolerance);
  }

  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["suite"] == "eisen");
  CHECK(j["cases"].size() == r.cases.size());
  CHECK(j.contains("elapsed_ms"));
  CHECK(!nlohmann::json::parse(r.to_json(false)).contains("elapsed_ms"));
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("inputs"));
    CHECK(c.contains("residual"));
    CHECK(c.contains("tolerance"));
    CHECK(c.contains("pass"));
  }

  CHECK(r.to_csv().rfind("id,", 0) == 0);
  CHECK_THROWS_AS(run_suite("nonsense", ctx), UnknownSuite);
}

TEST_CASE("points override") {
  const EvalContext ctx(20);
  SuiteReport r = run_suite("fe", ctx, 5);
  int two_term = 0;
  for (const auto& c : r.cases)
    if (c.id.rfind("two-term/", 0) == 0) ++two_term;
  CHECK(two_term == 5);
}
