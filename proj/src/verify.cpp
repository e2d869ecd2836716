#include "plab/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "plab/detail/special.hpp"
#include "plab/eisenperiod.hpp"
#include "plab/errors.hpp"
#include "plab/heckeact.hpp"
#include "plab/herglotz1.hpp"
#include "plab/kronecker.hpp"
#include "plab/numerics.hpp"
#include "plab/parallel.hpp"
#include "plab/periodfn.hpp"
#include "plab/quadrature.hpp"

namespace plab {

GridKind parse_grid_kind(const std::string& name) {
  if (name == "real-positive") return GridKind::real_positive;
  if (name == "complex-offcut") return GridKind::complex_offcut;
  if (name == "upper-half") return GridKind::upper_half;
  throw ParseError("unknown grid kind '" + name + "'");
}

std::vector<std::complex<double>> grid(std::uint64_t seed, int count, GridKind kind) {
  if (count < 1) throw DomainError("grid: count must be >= 1");
  std::mt19937_64 rng(seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto log_uniform = [&] { return 0.05 * std::pow(400.0, unit()); };
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    switch (kind) {
      case GridKind::real_positive:
        out.emplace_back(log_uniform(), 0.0);
        break;
      case GridKind::complex_offcut: {
        double r = log_uniform();
        double arg = -3.0 + 6.0 * unit();
        out.push_back(std::polar(r, arg));
        break;
      }
      case GridKind::upper_half: {
        double re = -0.5 + unit();
        double im = 0.5 + 2.5 * unit();
        out.emplace_back(re, im);
        break;
      }
    }
  }
  return out;
}

// ---- Xi integral ----------------------------------------------------------

namespace {

// |Xi(t/2) Gamma((-1+it)/4)|^2 / (1 + t^2) without the cosine.  With
// zeta_bound set, |zeta(1/2 + it/2)| is replaced by 3 max(1, t/2)^(1/2).
Real xi_weight(const Real& t, double thr, bool zeta_bound) {
  const Complex s(Real(1) / 2, t / 2);
  Real z2;
  if (zeta_bound) {
    z2 = 9 * max(Real(1), t / 2);
  } else {
    z2 = sqr(abs(detail::riemann_zeta(s, thr)));
  }
  Complex lg = detail::log_gamma(s / 2, thr) + detail::log_gamma(Complex(Real(-1) / 4, t / 4), thr);
  // |s(s-1)/2|^2 |pi^(-s/2)|^2
  Real pref = sqr((Real(1) / 4 + sqr(t) / 4) / 2) / sqrt(const_pi());
  return pref * z2 * exp(2 * lg.re) / (1 + sqr(t));
}

}  // namespace

Real xi_integral(const Real& x, const EvalContext& ctx) {
  if (!(x > 0)) throw DomainError("xi_integral: needs x > 0");
  PrecisionScope scope(ctx);
  const double thr = ctx.asymptotic_threshold();
  // The weight decays like t e^(-pi t / 2); integral_T^inf t e^(-at) = e^(-aT)(T/a + 1/a^2).
  const Real eps = pow(Real(10), -static_cast<long>(ctx.working_digits()));
  long T = 10;
  while (true) {
    Real Tr(T);
    Real tail = xi_weight(Tr, thr, true) * (2 / const_pi()) * (1 + Real(1) / Tr) * 2;
    if (tail < eps) break;
    T += 2;
    if (T > 4000) throw ConvergenceError("xi_integral: tail bound not met below t = 4000");
  }
  const Real lx = log(x);
  const long pieces = (T + 9) / 10;
  auto opts = quad::options_for(ctx);
  auto parts = map_indices<Real>(
      pieces,
      [&](long i) {
        Real a(10 * i), b(std::min(T, 10 * (i + 1)));
        return quad::tanh_sinh<Real>(
            [&](const Real& t) { return xi_weight(t, thr, false) * cos(t * lx / 2); }, a, b, opts,
            "xi_integral");
      },
      ctx.exec());
  Real sum;
  for (auto& p : parts) sum += p;
  return -sum / pow(const_pi(), Real(3) / 2);
}

Real xi_left_member(const Real& x, const EvalContext& ctx) {
  if (!(x > 0)) throw DomainError("xi_left_member: needs x > 0");
  Real f = frak_F1(x, ctx);
  PrecisionScope scope(ctx);
  return sqrt(x) * ((const_euler() - log(2 * const_pi() * x)) / (2 * x) + f);
}

// ---- reports ----------------------------------------------------------------

namespace {

double to_json_number(const Real& r) {
  if (r.is_zero()) return 0.0;
  return r.to_double();
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_point(std::complex<double> z) {
  if (z.imag() == 0) return fmt_double(z.real());
  return fmt_double(z.real()) + (z.imag() < 0 ? "" : "+") + fmt_double(z.imag()) + "i";
}

}  // namespace

std::string SuiteReport::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["precision"] = precision;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.inputs) in[k] = v;
    cj["inputs"] = in;
    cj["residual"] = to_json_number(c.residual);
    cj["tolerance"] = to_json_number(c.tolerance);
    cj["pass"] = c.pass;
    arr.push_back(std::move(cj));
  }
  j["cases"] = std::move(arr);
  j["pass"] = pass;
  if (timing) j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  size_t failed = 0;
  for (const auto& c : cases) {
    if (!c.pass) ++failed;
    os << (c.pass ? "PASS  " : "FAIL  ") << c.id << "  residual " << to_sci(c.residual) << "  tol "
       << to_sci(c.tolerance) << '\n';
  }
  os << suite << ": " << (cases.size() - failed) << "/" << cases.size() << " passed"
     << " (seed " << seed << ", precision " << precision << ")\n";
  return os.str();
}

std::string SuiteReport::to_csv() const {
  std::ostringstream os;
  os << "id,inputs,residual,tolerance,pass\n";
  for (const auto& c : cases) {
    std::string in;
    for (const auto& [k, v] : c.inputs) {
      if (!in.empty()) in += ';';
      in += k + "=" + v;
    }
    os << c.id << ",\"" << in << "\"," << to_sci(c.residual, 6) << ',' << to_sci(c.tolerance, 6) << ','
       << (c.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

// ---- suites -----------------------------------------------------------------

namespace {

// Digits each suite may lose against the working precision.
constexpr int kLossFe = 5;
constexpr int kLossHecke = 5;
constexpr int kLossLimit = 30;
constexpr int kLossOverlap = 8;
constexpr int kLossJfun = 10;
constexpr int kLossEisen = 5;
constexpr int kLossGenperiod = 8;
constexpr int kLossHigherKlf = 5;
constexpr double kTableRelTol = 1e-8;   // eight significant digits
constexpr double kTablePairTol = 1e-12;  // the two sides against each other

using Inputs = std::vector<std::pair<std::string, std::string>>;

class Builder {
 public:
  Builder(const EvalContext& ctx, SuiteReport& rep) : ctx_(ctx), rep_(rep) {}

  // 10^-(precision - loss) * max(1, |scale|)
  Real tol(int loss, const Real& scale = Real(1)) const {
    PrecisionScope scope(ctx_);
    return pow(Real(10), -static_cast<long>(ctx_.precision_digits() - loss)) * max(Real(1), abs(scale));
  }

  void add(std::string id, Inputs inputs, const Real& residual, const Real& tolerance) {
    PrecisionScope scope(ctx_);
    bool ok = residual.is_finite() && residual <= tolerance;
    rep_.cases.push_back({std::move(id), std::move(inputs), abs(residual), tolerance, ok});
  }

  // Runs `body`; a thrown numeric error is recorded as a failed case.
  void guarded(const std::string& id, const Inputs& inputs, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      PrecisionScope scope(ctx_);
      Real inf;
      mpfr_set_inf(inf.get(), 1);
      rep_.cases.push_back({id, inputs, inf, Real(0), false});
      rep_.cases.back().inputs.emplace_back("error", e.what());
    }
  }

  const EvalContext& ctx() const { return ctx_; }

 private:
  const EvalContext& ctx_;
  SuiteReport& rep_;
};

Real real_of(double v) { return Real(v); }

Complex complex_of(std::complex<double> z) { return Complex(Real(z.real()), Real(z.imag())); }

int count_or(int points, int def) { return points > 0 ? points : def; }

void suite_fe(Builder& b, int points) {
  const auto& ctx = b.ctx();
  PrecisionScope scope(ctx);
  auto pts = grid(ctx.seed(), count_or(points, 50), GridKind::complex_offcut);
  for (size_t i = 0; i < pts.size(); ++i) {
    const Complex x = complex_of(pts[i]);
    Inputs in{{"x", fmt_point(pts[i])}};
    b.guarded("three-term/" + std::to_string(i), in, [&] {
      Complex x1 = x + 1;
      Complex a = F1(x, ctx), c = F1(x1, ctx), d = F1(Complex(x / x1), ctx);
      PrecisionScope s2(ctx);
      Complex r = a - c - d / x1;
      Real scale = max(abs(a), max(abs(c), abs(d / x1)));
      b.add("three-term/" + std::to_string(i), in, abs(r), b.tol(kLossFe, scale));
    });
    b.guarded("two-term/" + std::to_string(i), in, [&] {
      Complex a = F1(x, ctx), c = F1(Complex(Real(1) / x), ctx);
      PrecisionScope s2(ctx);
      Complex r = a - c / x;
      b.add("two-term/" + std::to_string(i), in, abs(r), b.tol(kLossFe, abs(a)));
    });
  }
  // Inhomogeneous relation for frak_F1 on the real line.
  auto reals = grid(ctx.seed() + 1, count_or(points, 50) / 5 + 1, GridKind::real_positive);
  for (size_t i = 0; i < reals.size(); ++i) {
    Inputs in{{"x", fmt_point(reals[i])}};
    b.guarded("frak-three-term/" + std::to_string(i), in, [&] {
      Real x = real_of(reals[i].real());
      Real x1 = x + 1;
      Real a = frak_F1(x, ctx), c = frak_F1(x1, ctx), d = frak_F1(Real(x / x1), ctx);
      PrecisionScope s2(ctx);
      Real r = a - c - d / x1 + (const_euler() - log(2 * const_pi()) - x * log(x / x1)) / (2 * x1);
      b.add("frak-three-term/" + std::to_string(i), in, abs(r), b.tol(kLossFe, abs(a)));
    });
    // Series and integral routes.
    b.guarded("routes/" + std::to_string(i), in, [&] {
      Complex x = Complex(real_of(reals[i].real()));
      Complex a = F1(x, ctx), c = F1_integral(x, ctx);
      PrecisionScope s2(ctx);
      b.add("routes/" + std::to_string(i), in, abs(a - c), b.tol(kLossFe, abs(a)));
    });
  }
  // Large-x expansion: the error stays within twice the first omitted term.
  for (int x : {20, 50, 100}) {
    for (int m : {4, 8, 12}) {
      std::string id = "asymptotic/" + std::to_string(x) + "/" + std::to_string(m);
      Inputs in{{"x", std::to_string(x)}, {"terms", std::to_string(m)}};
      b.guarded(id, in, [&] {
        Complex xv{Real(x)};
        Asymptotic as = F1_asymptotic(xv, m, ctx);
        Complex f = F1(xv, ctx);
        PrecisionScope s2(ctx);
        b.add(id, in, abs(f - as.value), 2 * as.bound);
      });
    }
  }
}

// F1 at 1, 2 and 1/2 from the closed values 1/2, 1/4, 1/2.
Complex F1_hand(const Complex& x) {
  const Real eps("1e-25");
  const std::pair<Real, Real> table[] = {{Real(1), Real(1) / 2}, {Real(2), Real(1) / 4}, {Real(1) / 2, Real(1) / 2}};
  for (const auto& [at, v] : table)
    if (abs(x - Complex(at)) < eps) return Complex(v);
  throw DomainError("hand value: no closed F1 value at " + to_string(x, 10));
}

void suite_hecke(Builder& b, int points) {
  const auto& ctx = b.ctx();
  PrecisionScope scope(ctx);
  auto pts = grid(ctx.seed() + 2, count_or(points, 20), GridKind::real_positive);
  for (long n = 1; n <= 6; ++n) {
    for (size_t i = 0; i < pts.size(); ++i) {
      std::string id = "F1/n" + std::to_string(n) + "/" + std::to_string(i);
      Inputs in{{"n", std::to_string(n)}, {"x", fmt_point(pts[i])}};
      b.guarded(id, in, [&] {
        Real x = real_of(pts[i].real());
        Real r = eigen_residual_F1(n, x, ctx);
        Real f = F1(x, ctx);
        b.add(id, in, r, b.tol(kLossHecke, Real(abs(f) * n)));
      });
    }
  }
  {
    Inputs in{{"n", "2"}, {"x", "1"}};
    b.guarded("F1/hand-value", in, [&] {
      HeckeElement h = hecke_hat(2);
      Complex lhs = slash(F1_hand, Real(1), h, Complex(Real(1)), ctx);
      PrecisionScope s2(ctx);
      Complex r = lhs - Complex(sqrt(Real(2)) * 2 * F1_hand(Complex(Real(1))).re);
      b.add("F1/hand-value", in, abs(r), b.tol(kLossHecke));
    });
  }
  auto spts = grid(ctx.seed() + 3, count_or(points, 10), GridKind::real_positive);
  for (const char* s : {"1.25", "1.75", "2.5"}) {
    for (long n = 1; n <= 4; ++n) {
      for (size_t i = 0; i < spts.size(); ++i) {
        std::string id = std::string("psi/s") + s + "/n" + std::to_string(n) + "/" + std::to_string(i);
        Inputs in{{"s", s}, {"n", std::to_string(n)}, {"x", fmt_point(spts[i])}};
        b.guarded(id, in, [&] {
          Real sv{std::string_view(s)}, x = real_of(spts[i].real());
          Real r = eigen_residual_psi(n, sv, x, ctx);
          Real p = psi_plus(sv, x, ctx);
          PrecisionScope s2(ctx);
          b.add(id, in, r, b.tol(kLossHecke, Real(abs(p) * pow(Real(n), sv) * divisor_count(n))));
        });
      }
    }
  }
  // Cotangent identity on a grid kept away from the poles.
  std::mt19937_64 rng(ctx.seed() + 4);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const int cot_points = count_or(points, 10);
  for (long n = 1; n <= 4; ++n) {
    int made = 0;
    for (int attempt = 0; made < cot_points && attempt < 50 * cot_points; ++attempt) {
      double xd = -2 + 4 * unit(), yd = -2 + 4 * unit();
      Real x(xd), y(yd);
      Real r;
      try {
        r = cot_identity_residual(n, x, y, ctx);
      } catch (const PoleError&) {
        continue;
      }
      std::string id = "cot/n" + std::to_string(n) + "/" + std::to_string(made++);
      b.add(id, {{"n", std::to_string(n)}, {"x", fmt_double(xd)}, {"y", fmt_double(yd)}}, r, b.tol(kLossHecke));
    }
  }
  for (long n = 1; n <= 6; ++n) {
    Integer c = c_hom(hecke_hat(n));
    b.add("c-hom/n" + std::to_string(n), {{"n", std::to_string(n)}}, Real(Integer(abs(c))), Real(0));
  }
}

const char* const kTableLhs[2][2] = {{"51.304025670384526", "156.2731732710374"},
                                     {"8.46173083386907", "11.729190698921457"}};
const char* const kTableRhs[2][2] = {{"51.304025667471024", "156.27317327706047"},
                                     {"8.461730833267936", "11.729190666820669"}};

void suite_klf(Builder& b, int) {
  const auto& ctx = b.ctx();
  PrecisionScope scope(ctx);
  auto classes = sqrt3_classes();
  for (int c = 0; c < 2; ++c) {
    for (int k = 3; k <= 4; ++k) {
      const std::string base = "table/" + classes[c].name + "/k" + std::to_string(k);
      Inputs in{{"class", classes[c].name}, {"k", std::to_string(k)}};
      b.guarded(base, in, [&] {
        Real lhs = partial_zeta(k, classes[c], ctx);
        Real rhs = higher_klf_rhs(k, classes[c], ctx);
        PrecisionScope s2(ctx);
        Real pl{std::string_view(kTableLhs[c][k - 3])}, pr{std::string_view(kTableRhs[c][k - 3])};
        b.add(base + "/lhs-printed", in, abs(lhs - pl) / abs(pl), Real(kTableRelTol));
        b.add(base + "/rhs-printed", in, abs(rhs - pr) / abs(pr), Real(kTableRelTol));
        b.add(base + "/lhs-rhs", in, abs(lhs - rhs) / abs(lhs), Real(kTablePairTol));
      });
    }
  }
  for (const auto& cls : classes) {
    for (const QuadIrr& w : cls.reduced) {
      for (int k = 3; k <= 5; ++k) {
        std::string id = "overlap/" + w.to_string() + "/s" + std::to_string(k);
        Inputs in{{"w", w.to_string()}, {"s", std::to_string(k)}};
        b.guarded(id, in, [&] {
          Complex zc = Z_continued(Complex(Real(k)), w, ctx);
          Real zd = Z_direct(k, w, ctx);
          PrecisionScope s2(ctx);
          b.add(id, in, abs(zc - Complex(zd)), b.tol(kLossOverlap, zd));
        });
      }
    }
  }
  // Two-sided extraction at s = 1 +- h.
  const Real h("1e-6");
  // 10^-(precision - 30), never looser than 1e-8 so that low precision still tests something.
  const Real limit_tol = min(b.tol(kLossLimit), Real("1e-8"));
  for (const char* ws : {"2+sqrt(3)", "1+sqrt(3)/3", "(3+sqrt(3))/2", "(3+sqrt(5))/2", "4+sqrt(15)"}) {
    QuadIrr w = parse_quad(ws);
    Inputs in{{"w", w.to_string()}, {"h", "1e-6"}};
    b.guarded(std::string("laurent/") + ws, in, [&] {
      Laurent l = laurent_at_one(w, h, ctx);
      PrecisionScope s2(ctx);
      Real x = w.value(), y = conjugate(w).value();
      Real pt = P_tilde(x, y, ctx);
      Real lc = laurent_constant(x, y, ctx);
      b.add("laurent/" + w.to_string() + "/residue", in, abs(l.residue - (x - y) / (2 * x * y)), limit_tol);
      b.add("laurent/" + w.to_string() + "/constant-P_tilde", in, abs(l.constant - pt), limit_tol);
      b.add("laurent/" + w.to_string() + "/constant-corrected-sign", in, abs(l.constant - lc), limit_tol);
    });
  }
}

void suite_higher_klf(Builder& b, int) {
  const auto& ctx = b.ctx();
  PrecisionScope scope(ctx);
  for (const auto& cls : sqrt3_classes()) {
    for (int k = 3; k <= 5; ++k) {
      std::string id = "thm/" + cls.name + "/k" + std::to_string(k);
      Inputs in{{"class", cls.name}, {"k", std::to_string(k)}};
      b.guarded(id, in, [&] {
        Real lhs = partial_zeta(k, cls, ctx);
        Real rhs = higher_klf_rhs(k, cls, ctx);
        PrecisionScope s2(ctx);
        b.add(id, in, abs(lhs - rhs), b.tol(kLossHigherKlf, lhs));
      });
    }
  }
}

void suite_jfun(Builder& b, int points) {
  const auto& ctx = b.ctx();
  PrecisionScope scope(ctx);
  auto pts = grid(ctx.seed() + 5, count_or(points, 30), GridKind::real_positive);
  for (size_t i = 0; i < pts.size(); ++i) {
    Inputs in{{"x", fmt_point(pts[i])}};
    const std::string is = std::to_string(i);
    b.guarded("two-term/" + is, in, [&] {
      Real x = real_of(pts[i].real());
      Real a = calJ1(x, ctx), c = calJ1(Real(Real(1) / x), ctx);
      PrecisionScope s2(ctx);
      b.add("two-term/" + is, in, abs(a - c / x), b.tol(kLossJfun, a));
    });
    b.guarded("via-F1/" + is, in, [&] {
      Real x = real_of(pts[i].real());
      Real a = calJ1(x, ctx), c = calJ1_via_F1(x, ctx);
      PrecisionScope s2(ctx);
      b.add("via-F1/" + is, in, abs(a - c), b.tol(kLossJfun, a));
    });
  }
  for (long n = 1; n <= 8; ++n) {
    for (bool inv : {false, true}) {
      std::string id = "closed/" + std::string(inv ? "1/" : "") + std::to_string(n);
      Inputs in{{"n", std::to_string(n)}, {"inverted", inv ? "true" : "false"}};
      b.guarded(id, in, [&] {
        Real x = inv ? Real(Real(1) / n) : Real(n);
        Real a = calJ1_closed(n, inv, ctx), q = calJ1(x, ctx);
        PrecisionScope s2(ctx);
        b.add(id, in, abs(a - q), b.tol(kLossJfun, q));
      });
    }
  }
  for (long n : {2, 4}) {
    std::string id = "unit/" + std::to_string(n);
    Inputs in{{"n", std::to_string(n)}};
    b.guarded(id, in, [&] {
      Real u;
      {
        PrecisionScope s2(ctx);
        u = Real(n) + sqrt(Real(n * n - 1));
      }
      Real a = unit_eval(n, ctx), q = calJ1(u, ctx);
      PrecisionScope s2(ctx);
      b.add(id, in, abs(a - q), b.tol(kLossJfun, q));
    });
  }
  {
    Inputs in{{"x", "1"}};
    b.guarded("J/at-1", in, [&] {
      Real j = J_RZ(Real(1), ctx);
      PrecisionScope s2(ctx);
      b.add("J/at-1", in, abs(j - sqr(const_log2()) / 2), b.tol(kLossJfun));
    });
  }
  auto jpts = grid(ctx.seed() + 6, count_or(points, 30) / 3 + 1, GridKind::real_positive);
  for (size_t i = 0; i < jpts.size(); ++i) {
    Inputs in{{"x", fmt_point(jpts[i])}};
    std::string id = "J/relation/" + std::to_string(i);
    b.guarded(id, in, [&] {
      Real x = real_of(jpts[i].real());
      Real a = J_RZ(x, ctx), c = J_RZ_via_F2(x, ctx);
      PrecisionScope s2(ctx);
      b.add(id, in, abs(a - c), b.tol(kLossJfun, c));
    });
  }
}

void suite_eisen(Builder& b, int) {
  const auto& ctx = b.ctx();
  PrecisionScope scope(ctx);
  const std::pair<const char*, Complex> taus[] = {{"i", Complex(Real(0), Real(1))},
                                                  {"1/2+i", Complex(Real(1) / 2, Real(1))},
                                                  {"2i", Complex(Real(0), Real(2))}};
  for (const auto& [name, tau] : taus) {
    std::string id = std::string("prop51/") + name;
    Inputs in{{"tau", name}};
    b.guarded(id, in, [&] { b.add(id, in, prop51_residual(tau, ctx), b.tol(kLossEisen)); });
    std::string rid = std::string("R1/") + name;
    b.guarded(rid, in, [&] {
      Complex a = R1(tau, ctx), c = R1_eisenstein(tau, ctx);
      PrecisionScope s2(ctx);
      b.add(rid, in, abs(a - c), b.tol(kLossEisen, abs(a)));
    });
  }
  const std::tuple<const char*, const char*, Complex> bc[] = {
      {"1.25", "i", Complex(Real(0), Real(1))}, {"1.6", "1/2+2i", Complex(Real(1) / 2, Real(2))}};
  for (const auto& [s, name, tau] : bc) {
    std::string id = std::string("prop63/s") + s + "/" + name;
    Inputs in{{"s", s}, {"tau", name}};
    b.guarded(id, in, [&] {
      Complex sv{Real(std::string_view(s))};
      Complex ps = Psi_s(sv, tau, ctx);
      Real r = prop63_residual(sv, tau, ctx);
      b.add(id, in, r, b.tol(kLossEisen, abs(ps)));
    });
  }
  for (long N = 1; N <= 12; ++N) {
    for (bool inv : {false, true}) {
      std::string id = "kurokawa/" + std::string(inv ? "1/" : "") + std::to_string(N);
      Inputs in{{"N", std::to_string(N)}, {"inverted", inv ? "true" : "false"}};
      b.guarded(id, in, [&] {
        Real closed = kurokawa_F1(N, inv, ctx);
        Real x;
        {
          PrecisionScope s2(ctx);
          x = inv ? Real(Real(1) / N) : Real(N);
        }
        Real series = F1(x, ctx);
        PrecisionScope s2(ctx);
        b.add(id, in, abs(closed - series), b.tol(kLossEisen, series));
      });
    }
  }
}

void suite_genperiod(Builder& b, int points) {
  const auto& ctx = b.ctx();
  PrecisionScope scope(ctx);
  for (const char* s : {"0.75", "1.5", "2", "3"}) {
    std::string id = std::string("at-1/s") + s;
    Inputs in{{"s", s}};
    b.guarded(id, in, [&] {
      Real sv{std::string_view(s)};
      Real p = psi_plus(sv, Real(1), ctx);
      Real z = riemann_zeta(Real(2 * sv - 1), ctx);
      PrecisionScope s2(ctx);
      b.add(id, in, abs(p - z), b.tol(kLossGenperiod, z));
    });
  }
  auto pts = grid(ctx.seed() + 7, count_or(points, 30), GridKind::real_positive);
  for (size_t i = 0; i < pts.size(); ++i) {
    Inputs in{{"x", fmt_point(pts[i])}};
    std::string id = "half/" + std::to_string(i);
    b.guarded(id, in, [&] {
      Real x = real_of(pts[i].real());
      // F1 through its integral, independent of the Hurwitz series.
      Real p = psi_plus(Real(Real(1) / 2), x, ctx);
      Complex f = F1_integral(Complex(x), ctx);
      PrecisionScope s2(ctx);
      b.add(id, in, abs(Complex(p) + f), b.tol(kLossGenperiod, abs(f)));
    });
  }
  auto tpts = grid(ctx.seed() + 8, count_or(points, 30) / 3 + 1, GridKind::real_positive);
  for (const char* s : {"0.75", "1.25", "2.5"}) {
    for (size_t i = 0; i < tpts.size(); ++i) {
      std::string id = std::string("three-term/s") + s + "/" + std::to_string(i);
      Inputs in{{"s", s}, {"x", fmt_point(tpts[i])}};
      b.guarded(id, in, [&] {
        Real sv{std::string_view(s)}, x = real_of(tpts[i].real());
        Real p = psi_plus(sv, x, ctx);
        b.add(id, in, psi_three_term_residual(sv, x, ctx), b.tol(kLossGenperiod, p));
      });
    }
  }
  for (const char* s : {"1.2", "1.5", "2"}) {
    for (const char* x : {"0.7", "1", "3.5"}) {
      std::string id = std::string("integral/s") + s + "/x" + x;
      Inputs in{{"s", s}, {"x", x}};
      b.guarded(id, in, [&] {
        Real sv{std::string_view(s)}, xv{std::string_view(x)};
        Complex a = psi_plus_integral(sv, Complex(xv), ctx);
        Real c = psi_plus(sv, xv, ctx);
        PrecisionScope s2(ctx);
        b.add(id, in, abs(a - Complex(c)), b.tol(kLossGenperiod, c));
      });
    }
  }
  // Residue at s = 1 by two-sided extraction.
  const Real limit_tol = min(b.tol(kLossLimit), Real("1e-8"));
  for (const char* x : {"0.7", "1", "2.3"}) {
    std::string id = std::string("residue/x") + x;
    Inputs in{{"x", x}, {"h", "1e-6"}};
    b.guarded(id, in, [&] {
      Real h("1e-6"), xv{std::string_view(x)};
      Real up = psi_plus(Real(1 + h), xv, ctx);
      Real dn = psi_plus(Real(1 - h), xv, ctx);
      PrecisionScope s2(ctx);
      b.add(id, in, abs((up - dn) * h / 2 - Real(1) / (2 * xv)), limit_tol);
    });
  }
  // Growth at infinity and at zero; the tolerance is twice the next term.
  const std::pair<const char*, const char*> growth[] = {{"1.5", "100"}, {"2.5", "60"}, {"1.2", "0.01"}, {"1.75", "0.02"}};
  for (const auto& [s, x] : growth) {
    std::string id = std::string("growth/s") + s + "/x" + x;
    Inputs in{{"s", s}, {"x", x}};
    b.guarded(id, in, [&] {
      GrowthCheck g = psi_growth_residual(Real(std::string_view(s)), Real(std::string_view(x)), ctx);
      b.add(id, in, g.residual, g.bound);
    });
  }
}

void suite_ramanujan_integral(Builder& b, int) {
  const auto& ctx = b.ctx();
  PrecisionScope scope(ctx);
  // Quadrature over the critical line costs digits; the suite keeps the
  // genperiod allowance.
  std::map<std::string, Real> values;
  for (const char* x : {"1", "2", "0.5"}) {
    std::string id = std::string("left-member/x") + x;
    Inputs in{{"x", x}};
    b.guarded(id, in, [&] {
      Real xv{std::string_view(x)};
      Real v = xi_integral(xv, ctx);
      Real l = xi_left_member(xv, ctx);
      values[x] = v;
      PrecisionScope s2(ctx);
      b.add(id, in, abs(v - l), b.tol(kLossGenperiod, l));
    });
  }
  if (values.count("2") && values.count("0.5")) {
    b.add("symmetry/x2", {{"x", "2"}}, abs(values["2"] - values["0.5"]), b.tol(kLossGenperiod, values["2"]));
  }
}

using SuiteFn = void (*)(Builder&, int);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> t = {
      {"fe", suite_fe},       {"hecke", suite_hecke},   {"klf", suite_klf},
      {"higher-klf", suite_higher_klf}, {"jfun", suite_jfun}, {"eisen", suite_eisen},
      {"genperiod", suite_genperiod}, {"ramanujan-integral", suite_ramanujan_integral}};
  return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : suite_table()) v.push_back(n);
    v.push_back("all");
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const EvalContext& ctx, int points) {
  SuiteReport rep;
  rep.suite = name;
  rep.seed = ctx.seed();
  rep.precision = ctx.precision_digits();
  const auto start = std::chrono::steady_clock::now();
  bool found = false;
  for (const auto& [n, fn] : suite_table()) {
    if (name != n && name != "all") continue;
    found = true;
    SuiteReport part;
    Builder b(ctx, part);
    fn(b, points);
    for (auto& c : part.cases) {
      if (name == "all") c.id = n + "/" + c.id;
      rep.cases.push_back(std::move(c));
    }
  }
  if (!found) throw UnknownSuite("unknown suite '" + name + "'");
  for (const auto& c : rep.cases) rep.pass = rep.pass && c.pass;
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace plab
