#include <doctest.h>

#include "omegalim/errors.hpp"
#include "omegalim/in_number.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace omegalim;

namespace {
Prototype W() { return Prototype::omega(); }
Prototype U() { return Prototype::unit(); }
Limit L(std::initializer_list<Term> ts) { return Limit::from_terms(ts); }
InNumber ratio(Limit n, Limit d) { return InNumber(std::move(n), std::move(d)); }

// Bridges a pure-power limit into the oracle's series representation.
oracles::Series to_series(const Limit& l) {
  oracles::Series s;
  for (const auto& t : l.terms()) {
    REQUIRE(t.proto().pure_log_form());
    long long e = 0;
    if (!t.proto().is_unit_form()) {
      REQUIRE(t.proto().factors().size() == 1);
      REQUIRE(t.proto().factors()[0].base.log_depth() == 0);
      REQUIRE(t.proto().factors()[0].exponent.is_integer());
      e = t.proto().factors()[0].exponent.num().convert_to<long long>();
    }
    s[e] = t.coeff().value();
  }
  return s;
}
}  // namespace

TEST_SUITE("in_number") {

TEST_CASE("inverse and division") {
  Limit wp1 = L({Term(Scalar(1), W()), Term(Scalar(1), U())});
  InNumber x = in_inv(InNumber::from_limit(wp1));
  CHECK(lim_equal(x.num(), Limit::one()));
  CHECK(lim_equal(x.den(), wp1));
  CHECK_THROWS_AS(in_inv(InNumber::zero()), DivisionByZero);
  gen::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    InNumber a = gen::random_in_number(rng, 3, 2);
    if (a.is_zero()) continue;
    CHECK(in_equal(in_mul(a, in_inv(a)), InNumber::one()));
  }
}

TEST_CASE("comparison by cross-multiplication") {
  InNumber a = in_inv(InNumber::from_proto(W()));
  InNumber b = in_inv(InNumber::from_proto(pow(W(), Scalar(2))));
  CHECK(in_compare(a, b) == Ordering::Greater);
  Limit wp1 = L({Term(Scalar(1), W()), Term(Scalar(1), U())});
  Limit wm1 = L({Term(Scalar(1), W()), Term(Scalar(-1), U())});
  // w/(w+1) vs (w-1)/w cross-multiplies to w^2 vs w^2 - 1.
  CHECK(in_compare(ratio(Limit::single(Scalar(1), W()), wp1),
                   ratio(wm1, Limit::single(Scalar(1), W()))) ==
        Ordering::Greater);
  gen::Rng rng(1);
  InNumber c = gen::random_in_number(rng, 2, 1);
  CHECK(in_compare(c, c) == Ordering::Equal);
}

TEST_CASE("scaling num and den by a common positive limit") {
  gen::Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    InNumber a = gen::random_in_number(rng, 3, 2);
    InNumber b = gen::random_in_number(rng, 3, 2);
    Limit s = gen::random_limit(rng, 2, 2, /*allow_zero=*/false);
    if (lim_compare(s, Limit::zero()) != Ordering::Greater) s = lim_neg(s);
    InNumber a_scaled(lim_mul(a.num(), s), lim_mul(a.den(), s));
    CHECK(in_equal(a, a_scaled));
    CHECK(in_compare(a, b) == in_compare(a_scaled, b));
  }
}

TEST_CASE("truncate runs the expansion") {
  Limit wm1 = L({Term(Scalar(1), W()), Term(Scalar(-1), U())});
  Limit t = truncate(in_inv(InNumber::from_limit(wm1)), 3);
  Limit expected = L({Term(Scalar(1), pow(W(), Scalar(-1))),
                      Term(Scalar(1), pow(W(), Scalar(-2))),
                      Term(Scalar(1), pow(W(), Scalar(-3)))});
  CHECK(lim_equal(t, expected));
  // Oracle: geometric expansion of 1/(w - 1).
  auto series = oracles::divide(oracles::poly({{0, 1}}),
                                oracles::poly({{1, 1}, {0, -1}}), 3);
  CHECK(lim_equal(t, [&] {
    std::vector<Term> ts;
    for (auto& [e, c] : series)
      ts.emplace_back(Scalar(BigRational(c)), pow(W(), Scalar(e)));
    return Limit::from_terms(ts);
  }()));

  Limit w2p1 = L({Term(Scalar(1), pow(W(), Scalar(2))), Term(Scalar(1), U())});
  CHECK(lim_equal(truncate(ratio(w2p1, Limit::single(Scalar(1), W())), 2),
                  L({Term(Scalar(1), W()), Term(Scalar(1), pow(W(), Scalar(-1)))})));
  CHECK(lim_equal(truncate(InNumber::from_scalar(Scalar(5)), 4),
                  Limit::constant(Scalar(5))));
}

TEST_CASE("prefix stability of truncation") {
  gen::Rng rng(41);
  for (int i = 0; i < 150; ++i) {
    InNumber x = gen::random_in_number(rng, 3, 2);
    for (int d = 1; d <= 3; ++d) {
      Limit a = truncate(x, d);
      Limit b = truncate(x, d + 1);
      for (std::size_t k = 0; k < a.terms().size() && k < b.terms().size(); ++k)
        CHECK(term_equal(a.terms()[k], b.terms()[k]));
      CHECK(b.terms().size() >= a.terms().size());
    }
  }
}

TEST_CASE("leading_term and term_at") {
  Limit w2p1 = L({Term(Scalar(3), pow(W(), Scalar(2))), Term(Scalar(1), W())});
  Limit den = L({Term(Scalar(1), pow(W(), Scalar(2))), Term(Scalar(1), U())});
  auto lead = leading_term(ratio(w2p1, den));
  REQUIRE(lead);
  CHECK(lead->coeff() == Scalar(3));
  CHECK(lead->proto().is_unit_form());
  Limit wm1 = L({Term(Scalar(1), W()), Term(Scalar(-1), U())});
  auto t2 = term_at(in_inv(InNumber::from_limit(wm1)), 2);
  REQUIRE(t2);
  CHECK(t2->coeff() == Scalar(1));
  CHECK(proto_equal(t2->proto(), pow(W(), Scalar(-2))));
  CHECK(!leading_term(InNumber::zero()));
  CHECK(!term_at(InNumber::from_scalar(Scalar(5)), 2));
}

TEST_CASE("magnitude split") {
  Limit mixed = L({Term(Scalar(2), W()), Term(Scalar(3), U()),
                   Term(Scalar(5), pow(W(), Scalar(-2)))});
  auto parts = split_by_magnitude(InNumber::from_limit(mixed));
  CHECK(in_equal(parts.infinite, InNumber::from_term(Term(Scalar(2), W()))));
  CHECK(parts.finite == Scalar(3));
  CHECK(in_equal(parts.small,
                 InNumber::from_term(Term(Scalar(5), pow(W(), Scalar(-2))))));
  // Non-terminating purely infinite ratio.
  Limit wp1 = L({Term(Scalar(1), W()), Term(Scalar(1), U())});
  Prototype ew = exp_of(InNumber::from_proto(W()));
  InNumber fbarg = ratio(Limit::single(Scalar(1), ew), wp1);
  CHECK(purely_infinite_expansion(fbarg));
  auto fb = split_by_magnitude(fbarg);
  CHECK(fb.finite.is_zero());
  CHECK(fb.small.is_zero());
  CHECK(in_equal(fb.infinite, fbarg));
  CHECK(!purely_infinite_expansion(ratio(
      L({Term(Scalar(1), pow(W(), Scalar(2))), Term(Scalar(1), U())}),
      Limit::single(Scalar(1), W()))));
}

TEST_CASE("field laws hold exactly on random triples") {
  gen::Rng rng(43);
  for (int i = 0; i < 1000; ++i) {
    InNumber a = gen::random_in_number(rng, 3, 2);
    InNumber b = gen::random_in_number(rng, 3, 2);
    InNumber c = gen::random_in_number(rng, 3, 2);
    CHECK(in_equal(in_add(a, b), in_add(b, a)));
    CHECK(in_equal(in_mul(a, b), in_mul(b, a)));
    CHECK(in_equal(in_add(in_add(a, b), c), in_add(a, in_add(b, c))));
    CHECK(in_equal(in_mul(in_mul(a, b), c), in_mul(a, in_mul(b, c))));
    CHECK(in_equal(in_mul(a, in_add(b, c)),
                   in_add(in_mul(a, b), in_mul(a, c))));
    CHECK(in_equal(in_add(a, InNumber::zero()), a));
    CHECK(in_equal(in_mul(a, InNumber::one()), a));
    CHECK(in_add(a, in_neg(a)).is_zero());
  }
}

TEST_CASE("no multiplicative inverse inside plain limits") {
  // Truncations of 1/(w+1) never multiply back to exactly 1.
  Limit wp1 = L({Term(Scalar(1), W()), Term(Scalar(1), U())});
  InNumber inv = in_inv(InNumber::from_limit(wp1));
  for (int d = 1; d <= 6; ++d) {
    Limit approx = truncate(inv, d);
    CHECK(!lim_equal(lim_mul(approx, wp1), Limit::one()));
  }
}

}  // TEST_SUITE
