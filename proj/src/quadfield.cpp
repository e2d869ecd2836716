#include "plab/quadfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "plab/errors.hpp"

namespace plab {

namespace {

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

std::string trim(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

// "7", "-3/4", "1.25"
Rational parse_rational(std::string_view s) {
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  Rational q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("bad rational '" + std::string(s) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    q = Rational(Integer(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
      throw ParseError("bad decimal '" + std::string(s) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    q = Rational(Integer(std::string(ip.empty() ? "0" : ip) + std::string(fp)), scale);
  } else {
    if (!all_digits(body)) throw ParseError("bad number '" + std::string(s) + "'");
    q = Rational(Integer(std::string(body)));
  }
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

void check_d(const Integer& d) {
  if (d <= 0) throw DomainError("quadratic irrational: d must be positive");
  if (mpz_perfect_square_p(d.get_mpz_t())) throw DomainError("quadratic irrational: d = " + d.get_str() + " is a square");
}

}  // namespace

QuadIrr::QuadIrr(Rational r, Rational t, Integer d)
    : r_(canonical(std::move(r))), t_(canonical(std::move(t))), d_(std::move(d)) {
  check_d(d_);
  if (t_ == 0) throw DomainError("quadratic irrational: sqrt coefficient must be nonzero");
}

Real QuadIrr::value() const { return Real(r_) + Real(t_) * sqrt(Real(d_)); }

std::string QuadIrr::to_string() const {
  std::ostringstream os;
  if (r_ != 0) os << r_.get_str();
  if (t_ < 0) {
    os << '-' << Rational(-t_).get_str();
  } else {
    if (r_ != 0) os << '+';
    os << t_.get_str();
  }
  os << "*sqrt(" << d_.get_str() << ')';
  return os.str();
}

bool operator==(const QuadIrr& a, const QuadIrr& b) { return a.d_ == b.d_ && a.r_ == b.r_ && a.t_ == b.t_; }

int sign_of(const Rational& r, const Rational& t, const Integer& d) {
  const int sr = sgn(r), st = sgn(t);
  if (st == 0) return sr;
  if (sr == 0 || sr == st) return st;
  const Rational r2 = r * r, t2d = t * t * d;
  if (r2 == t2d) return 0;
  return r2 > t2d ? sr : st;
}

QuadIrr conjugate(const QuadIrr& w) { return QuadIrr(w.r(), -w.t(), w.d()); }

bool is_reduced(const QuadIrr& w) {
  const Rational& r = w.r();
  const Rational& t = w.t();
  const Integer& d = w.d();
  // w - 1 > 0, w' > 0, 1 - w' > 0
  return sign_of(r - 1, t, d) > 0 && sign_of(r, -t, d) > 0 && sign_of(1 - r, t, d) > 0;
}

Integer ceil_exact(const QuadIrr& w) {
  Integer k;
  {
    PrecisionScope scope(256 + static_cast<long>(mpz_sizeinbase(w.d().get_mpz_t(), 2)));
    Real v = floor(w.value());
    mpfr_get_z(k.get_mpz_t(), v.get(), MPFR_RNDD);
  }
  while (sign_of(w.r() - k, w.t(), w.d()) < 0) --k;
  while (sign_of(w.r() - (k + 1), w.t(), w.d()) >= 0) ++k;
  // w is irrational, so k < w < k + 1.
  return k + 1;
}

std::pair<Integer, QuadIrr> neg_cf_step(const QuadIrr& w) {
  Integer b = ceil_exact(w);
  // 1 / ((b - r) - t sqrt d) = ((b - r) + t sqrt d) / N
  Rational u = b - w.r();
  Rational n = u * u - w.t() * w.t() * w.d();
  return {b, QuadIrr(u / n, w.t() / n, w.d())};
}

Cycle neg_cf_expand(const QuadIrr& w, long max_period) {
  if (!is_reduced(w)) throw DomainError(w.to_string() + " is not reduced");
  Cycle out;
  QuadIrr cur = w;
  while (true) {
    if (static_cast<long>(out.size()) >= max_period) {
      throw LimitError("neg_cf_expand: period exceeds " + std::to_string(max_period));
    }
    auto [b, next] = neg_cf_step(cur);
    out.push_back(b.get_si());
    if (next == w) return out;
    cur = std::move(next);
  }
}

std::vector<QuadIrr> cycle_to_reduced(const Cycle& c, const Integer& d) {
  if (c.empty()) throw DomainError("cycle_to_reduced: empty cycle");
  for (long b : c)
    if (b < 2) throw DomainError("cycle_to_reduced: entries must be >= 2");
  if (std::all_of(c.begin(), c.end(), [](long b) { return b == 2; })) {
    throw DegenerateError("cycle_to_reduced: all entries 2 give the fixed point 1");
  }
  check_d(d);
  const size_t r = c.size();
  std::vector<QuadIrr> out;
  for (size_t k = 0; k < r; ++k) {
    // [al be; ga de] = prod_j [b_j -1; 1 0], j = k, k+1, ...
    Integer al = 1, be = 0, ga = 0, de = 1;
    for (size_t j = 0; j < r; ++j) {
      const long b = c[(k + j) % r];
      Integer nal = al * b + be, nbe = -al;
      Integer nga = ga * b + de, nde = -ga;
      al = nal, be = nbe, ga = nga, de = nde;
    }
    // ga w^2 + (de - al) w - be = 0
    Integer disc = (al + de) * (al + de) - 4;
    if (disc <= 0 || mpz_perfect_square_p(disc.get_mpz_t())) {
      throw DegenerateError("cycle_to_reduced: rational fixed point");
    }
    Integer sq = disc * d;
    if (!mpz_perfect_square_p(sq.get_mpz_t())) {
      throw DomainError("cycle_to_reduced: cycle " + cycle_to_string(c) + " does not lie in Q(sqrt(" + d.get_str() + "))");
    }
    Integer root;
    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
    // sqrt(disc) = (root / d) sqrt(d)
    QuadIrr w(Rational(al - de, 2 * ga), Rational(root, 2 * ga * d), d);
    if (!is_reduced(w)) throw DegenerateError("cycle_to_reduced: fixed point " + w.to_string() + " is not reduced");
    out.push_back(std::move(w));
  }
  return out;
}

Real Qk_form(const QuadIrr& w, long p, long q, const EvalContext& ctx) {
  if (w.t() <= 0) throw DomainError("Qk_form: needs w > w'");
  if (p < 1 || q < 0) throw DomainError("Qk_form: needs p >= 1, q >= 0");
  const Rational a = q + p * w.r();
  const Rational n = a * a - p * p * w.t() * w.t() * w.d();
  PrecisionScope scope(ctx);
  return Real(n) / (2 * Real(w.t()) * sqrt(Real(w.d())));
}

QuadIrr parse_quad(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty quadratic irrational");
  // "(expr)/q"
  Rational outer_div(1);
  if (s.front() == '(') {
    auto close = s.rfind(')');
    if (close == std::string::npos) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    std::string tail = s.substr(close + 1);
    if (!tail.empty()) {
      if (tail[0] != '/') throw ParseError("expected '/q' after ')' in '" + std::string(text) + "'");
      outer_div = parse_rational(tail.substr(1));
      if (outer_div == 0) throw ParseError("division by zero");
    }
    s = s.substr(1, close - 1);
  }
  // Split at top-level signs.
  std::vector<std::string> terms;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && i > start && (ch == '+' || ch == '-') && s[i - 1] != '*' && s[i - 1] != '/') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));
  Rational r(0), t(0);
  Integer d(0);
  for (const std::string& term : terms) {
    auto pos = term.find("sqrt(");
    if (pos == std::string::npos) {
      r += parse_rational(term);
      continue;
    }
    auto close = term.find(')', pos);
    if (close == std::string::npos) throw ParseError("unclosed sqrt in '" + std::string(text) + "'");
    std::string coeff = term.substr(0, pos);
    Rational b(1);
    if (coeff == "-") {
      b = -1;
    } else if (!coeff.empty() && coeff != "+") {
      if (coeff.back() != '*') throw ParseError("expected '*' before sqrt in '" + std::string(text) + "'");
      b = parse_rational(coeff.substr(0, coeff.size() - 1));
    }
    std::string rad = term.substr(pos + 5, close - pos - 5);
    if (!all_digits(rad)) throw ParseError("sqrt argument must be a positive integer in '" + std::string(text) + "'");
    Integer dv(rad);
    if (d != 0 && dv != d) throw ParseError("mixed square roots in '" + std::string(text) + "'");
    d = dv;
    std::string after = term.substr(close + 1);
    if (!after.empty()) {
      if (after[0] != '/') throw ParseError("unexpected '" + after + "' in '" + std::string(text) + "'");
      Rational q = parse_rational(after.substr(1));
      if (q == 0) throw ParseError("division by zero");
      b /= q;
    }
    t += b;
  }
  if (d == 0 || t == 0) throw ParseError("'" + std::string(text) + "' has no irrational part");
  return QuadIrr(r / outer_div, t / outer_div, d);
}

std::vector<Cycle> parse_cycles(std::string_view text) {
  std::vector<Cycle> out;
  std::string s = trim(text);
  std::stringstream outer(s);
  std::string part;
  while (std::getline(outer, part, ';')) {
    Cycle c;
    std::stringstream inner(part);
    std::string item;
    while (std::getline(inner, item, ',')) {
      if (!all_digits(item)) throw ParseError("bad cycle entry '" + item + "'");
      c.push_back(std::stol(item));
    }
    if (c.empty()) throw ParseError("empty cycle in '" + std::string(text) + "'");
    out.push_back(std::move(c));
  }
  if (out.empty()) throw ParseError("no cycles in '" + std::string(text) + "'");
  return out;
}

std::string cycle_to_string(const Cycle& c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace plab
