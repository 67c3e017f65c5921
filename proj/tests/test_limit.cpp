#include <doctest.h>

#include "omegalim/in_number.hpp"
#include "omegalim/limit.hpp"
#include "omegalim/tower.hpp"
#include "support/generators.hpp"

using namespace omegalim;

namespace {
Prototype W() { return Prototype::omega(); }
Prototype U() { return Prototype::unit(); }
Limit L(std::initializer_list<Term> ts) { return Limit::from_terms(ts); }
}  // namespace

TEST_SUITE("limit") {

TEST_CASE("addition merges classes and cancels") {
  Limit a = L({Term(Scalar(2), W()), Term(Scalar(3), U())});
  Limit b = L({Term(Scalar(-2), W()), Term(Scalar(1), pow(W(), Scalar(-1)))});
  Limit sum = lim_add(a, b);
  CHECK(lim_equal(sum, L({Term(Scalar(3), U()),
                          Term(Scalar(1), pow(W(), Scalar(-1)))})));
  CHECK(lim_equal(lim_add(a, Limit::zero()), a));
  Limit c = L({Term(Scalar(1), pow(W(), Scalar(2))), Term(Scalar(1), W())});
  Limit d = L({Term(Scalar(1), pow(W(), Scalar(2))), Term(Scalar(-1), W())});
  CHECK(lim_equal(lim_add(c, d), Limit::single(Scalar(2), pow(W(), Scalar(2)))));
}

TEST_CASE("multiplication distributes over terms") {
  Limit wp1 = L({Term(Scalar(1), W()), Term(Scalar(1), U())});
  Limit wm1 = L({Term(Scalar(1), W()), Term(Scalar(-1), U())});
  CHECK(lim_equal(lim_mul(wp1, wm1),
                  L({Term(Scalar(1), pow(W(), Scalar(2))), Term(Scalar(-1), U())})));
  // Single terms multiply coefficient by coefficient, class by class.
  Limit cp = Limit::single(Scalar(3), W());
  Limit dq = Limit::single(Scalar::ratio(1, 2), Prototype::log_atom(1));
  Limit prod = lim_mul(cp, dq);
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.leading().coeff() == Scalar::ratio(3, 2));
  CHECK(proto_equal(prod.leading().proto(), mul(W(), Prototype::log_atom(1))));
  CHECK(lim_mul(wp1, Limit::zero()).is_zero());
}

TEST_CASE("comparison is lexicographic by class then coefficient") {
  Limit wp1 = L({Term(Scalar(1), W()), Term(Scalar(1), U())});
  CHECK(lim_compare(wp1, Limit::single(Scalar(1), W())) == Ordering::Greater);
  CHECK(lim_compare(Limit::zero(),
                    Limit::single(Scalar(-1), pow(W(), Scalar(-1)))) ==
        Ordering::Greater);
  Prototype ew = exp_of(InNumber::from_proto(W()));
  Limit big = L({Term(Scalar(1), ew), Term(Scalar(-1), W())});
  Limit small = Limit::single(Scalar(1), pow(W(), Scalar(100)));
  CHECK(lim_compare(big, small) == Ordering::Greater);
  // Numeric cross-check: exp(n) - n overtakes n^100 along an extended
  // schedule (the crossover sits near n = 700).
  bool eventually_greater = false;
  for (std::uint64_t n : {1000ull, 10000ull, 100000ull}) {
    eventually_greater =
        tv_compare(eval_limit(big, n), eval_limit(small, n)) ==
        Ordering::Greater;
    if (!eventually_greater) break;
  }
  CHECK(eventually_greater);
}

TEST_CASE("leading-term closure under products") {
  gen::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    Limit a = Limit::single(gen::pick_coeff(rng), gen::random_prototype(rng, 2));
    Limit b = Limit::single(gen::pick_coeff(rng), gen::random_prototype(rng, 2));
    CHECK(lim_mul(a, b).terms().size() == 1);
  }
}

TEST_CASE("class sections embed the reals") {
  // For a fixed class p, c -> c*p respects order and multiplication into
  // the squared class.
  Prototype p = mul(W(), Prototype::log_atom(1));
  gen::Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    Scalar c = gen::pick_coeff(rng), d = gen::pick_coeff(rng);
    CHECK(lim_compare(Limit::single(c, p), Limit::single(d, p)) ==
          scalar_compare(c, d));
    Limit prod = lim_mul(Limit::single(c, p), Limit::single(d, p));
    CHECK(lim_equal(prod, Limit::single(c * d, mul(p, p))));
  }
}

}  // TEST_SUITE
