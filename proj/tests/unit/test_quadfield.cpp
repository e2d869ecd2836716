#include "plab/quadfield.hpp"

#include <random>

#include "plab/errors.hpp"
#include "support.hpp"

using namespace plab;
using plab::test::R;

namespace {

const EvalContext ctx(30);

QuadIrr Q(const char* s) { return parse_quad(s); }

}  // namespace

TEST_CASE("literals") {
  QuadIrr w = Q("2+1*sqrt(3)");
  CHECK(w.r() == 2);
  CHECK(w.t() == 1);
  CHECK(w.d() == 3);
  CHECK(Q("2+sqrt(3)") == w);
  CHECK(Q(" 2 + sqrt( 3 ) ") == w);
  CHECK(Q("(3+sqrt(3))/2") == QuadIrr(Rational(3, 2), Rational(1, 2), 3));
  CHECK(Q("3/2+1/2*sqrt(3)") == Q("(3+sqrt(3))/2"));
  CHECK(Q("1+sqrt(3)/3") == QuadIrr(1, Rational(1, 3), 3));
  CHECK(Q("2-1*sqrt(3)") == conjugate(w));
  CHECK(Q("-sqrt(5)+0.5") == QuadIrr(Rational(1, 2), -1, 5));
  CHECK(Q(w.to_string().c_str()) == w);
  CHECK(Q(Q("(3+sqrt(3))/2").to_string().c_str()) == Q("(3+sqrt(3))/2"));
  CHECK_THROWS_AS(Q("2+3"), ParseError);
  CHECK_THROWS_AS(Q("2+x*sqrt(3)"), ParseError);
  CHECK_THROWS_AS(Q("2+sqrt(4)"), DomainError);
  CHECK_THROWS_AS(Q("1+sqrt(2)+sqrt(3)"), ParseError);
  auto cs = parse_cycles("4;2,3");
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == Cycle{4});
  CHECK(cs[1] == Cycle{2, 3});
  CHECK_THROWS_AS(parse_cycles("2,,3"), ParseError);
  CHECK_THROWS_AS(parse_cycles("a"), ParseError);
}

TEST_CASE("conjugates and reduction") {
  QuadIrr w = Q("2+sqrt(3)");
  CHECK(conjugate(w) == Q("2-sqrt(3)"));
  CHECK(conjugate(conjugate(w)) == w);
  CHECK(is_reduced(w));
  CHECK_FALSE(is_reduced(Q("1+sqrt(3)")));
  CHECK(is_reduced(Q("(3+sqrt(3))/2")));
  CHECK_FALSE(is_reduced(Q("2-sqrt(3)")));
  CHECK_FALSE(is_reduced(Q("sqrt(2)")));
  CHECK(ceil_exact(w) == 4);
  CHECK(ceil_exact(Q("-sqrt(2)")) == -1);
  CHECK(ceil_exact(Q("1000000+1/1000000*sqrt(2)")) == 1000001);
}

TEST_CASE("negative continued fractions") {
  CHECK(neg_cf_expand(Q("2+sqrt(3)")) == Cycle{4});
  CHECK(neg_cf_expand(Q("1+sqrt(3)/3")) == Cycle{2, 3});
  CHECK(neg_cf_expand(Q("(3+sqrt(3))/2")) == Cycle{3, 2});
  CHECK(neg_cf_expand(Q("(3+sqrt(5))/2")) == Cycle{3});
  CHECK_THROWS_AS(neg_cf_expand(Q("1+sqrt(3)")), DomainError);
  CHECK_THROWS_AS(neg_cf_expand(Q("1+sqrt(3)/3"), 1), LimitError);

  auto b0 = cycle_to_reduced({4}, 3);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0] == Q("2+sqrt(3)"));
  auto b1 = cycle_to_reduced({2, 3}, 3);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == Q("1+sqrt(3)/3"));
  CHECK(b1[1] == Q("(3+sqrt(3))/2"));
  auto f5 = cycle_to_reduced({3}, 5);
  REQUIRE(f5.size() == 1);
  CHECK(f5[0] == Q("(3+sqrt(5))/2"));
  CHECK_THROWS_AS(cycle_to_reduced({4}, 5), DomainError);
  CHECK_THROWS_AS(cycle_to_reduced({2, 2}, 3), DegenerateError);
  CHECK_THROWS_AS(cycle_to_reduced({1, 3}, 3), DomainError);
}

TEST_CASE("round trip and orbit on random reduced numbers") {
  std::mt19937_64 rng(ctx.seed());
  std::uniform_int_distribution<long> entry(2, 7), len(1, 5);
  int found = 0;
  while (found < 20) {
    Cycle c;
    long n = len(rng);
    for (long i = 0; i < n; ++i) c.push_back(entry(rng));
    if (std::all_of(c.begin(), c.end(), [](long b) { return b == 2; })) continue;
    // Recover the field from the first fixed point, then check the round trip.
    Integer al = 1, be = 0, ga = 0, de = 1;
    for (long b : c) {
      Integer nal = al * b + be, nbe = -al, nga = ga * b + de, nde = -ga;
      al = nal, be = nbe, ga = nga, de = nde;
    }
    Integer disc = (al + de) * (al + de) - 4;
    auto ws = cycle_to_reduced(c, disc);
    CAPTURE(cycle_to_string(c));
    for (size_t k = 0; k < ws.size(); ++k) {
      CHECK(is_reduced(ws[k]));
      Cycle period = neg_cf_expand(ws[k]);
      auto back = cycle_to_reduced(period, disc);
      CHECK(std::find(back.begin(), back.end(), ws[k]) != back.end());
      auto [b, next] = neg_cf_step(ws[k]);
      CHECK(b == c[k]);
      CHECK(next == ws[(k + 1) % ws.size()]);
    }
    ++found;
  }
}

TEST_CASE("quadratic form") {
  PrecisionScope scope(ctx);
  QuadIrr w = Q("2+sqrt(3)");
  CHECK_CLOSE(Qk_form(w, 1, 0, ctx), Real(1) / (2 * sqrt(Real(3))), 29);
  // (1 + 2w)(1 + 2w') = N(5 + 2 sqrt 3) = 13
  CHECK_CLOSE(Qk_form(w, 2, 1, ctx), Real(13) / (2 * sqrt(Real(3))), 29);
  for (long q = 0; q < 5; ++q) {
    Real wv = w.value(), wc = conjugate(w).value();
    CHECK_CLOSE(Qk_form(w, 1, q, ctx), (q * q + q * (wv + wc) + wv * wc) / (wv - wc), 28);
  }
  CHECK_THROWS_AS(Qk_form(conjugate(w), 1, 0, ctx), DomainError);
}
