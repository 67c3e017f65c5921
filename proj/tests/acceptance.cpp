// Acceptance suite: golden orderings and end-to-end properties of the
// growth-class engine. Each criterion prints one PASS/FAIL line and carries
// a wall-clock budget; the process exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "omegalim/chains.hpp"
#include "omegalim/engine.hpp"
#include "omegalim/errors.hpp"
#include "omegalim/fit.hpp"
#include "omegalim/parse.hpp"
#include "omegalim/render.hpp"
#include "omegalim/tower.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace omegalim;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

Prototype P(const std::string& s) { return parse_prototype(s); }
SeqExprPtr S(const std::string& s) { return parse_expr(s, ParseContext::Sequence); }

// ---- criterion 1: generation 1 ordering -----------------------------------

void criterion_generation1() {
  for (const char* alpha : {"0.001", "1", "1000"}) {
    Prototype wa = P(std::string("w^") + alpha);
    require(compare(P("ln(w)"), wa) == Ordering::Less,
            std::string("ln(w) < w^") + alpha);
    require(compare(wa, P("exp(w)")) == Ordering::Less,
            std::string("w^") + alpha + " < exp(w)");
  }
}

// ---- criterion 2: generation 2 golden chain --------------------------------

void criterion_generation2() {
  const auto& exprs = generation_chain_exprs(2);
  std::vector<Prototype> parsed;
  for (const auto& e : exprs) parsed.push_back(P(e));
  int coincidences = 0;
  for (std::size_t i = 0; i + 1 < parsed.size(); ++i) {
    Ordering o = compare(parsed[i], parsed[i + 1]);
    if (o == Ordering::Equal) {
      require(exprs[i] == "exp(1*w)" && exprs[i + 1] == "exp(w^1)",
              "unexpected coincidence at " + exprs[i]);
      ++coincidences;
      continue;
    }
    require(o == Ordering::Less, exprs[i] + " < " + exprs[i + 1]);
  }
  require(coincidences == 1, "exactly one coincidence in the 12 entries");
  require(parsed.size() == 12, "12 entries");
}

// ---- criterion 3: generation 3 golden chain + spot instantiations ----------

void criterion_generation3() {
  const auto& exprs = generation_chain_exprs(3);
  std::vector<Prototype> parsed;
  for (const auto& e : exprs) parsed.push_back(P(e));
  for (std::size_t i = 0; i + 1 < parsed.size(); ++i) {
    Ordering o = compare(parsed[i], parsed[i + 1]);
    require(o != Ordering::Greater, exprs[i] + " <= " + exprs[i + 1]);
    if (!proto_equal(parsed[i], parsed[i + 1]))
      require(o == Ordering::Less, exprs[i] + " < " + exprs[i + 1]);
  }
  // Spot instantiations at (alpha, beta, gamma, delta) = (2, 3, 1, 1).
  const char* spot[] = {
      "exp(2*w^3)/w/ln(w)", "exp(2*w^3)/w",       "exp(2*w^3)*ln(w)/w",
      "exp(2*w^3)/ln(w)",   "exp(2*w^3)/ln(ln(w))", "exp(2*w^3)",
      "exp(2*w^3)*ln(ln(w))", "exp(2*w^3)*ln(w)", "exp(2*w^3)*w/ln(w)",
      "exp(2*w^3)*w",       "exp(2*w^3)*w*ln(w)"};
  for (std::size_t i = 0; i + 1 < std::size(spot); ++i)
    require(compare(P(spot[i]), P(spot[i + 1])) == Ordering::Less,
            std::string(spot[i]) + " < " + spot[i + 1]);
  const char* shifted[] = {"exp(2*w^3+w)/w", "exp(2*w^3+w)/ln(w)",
                           "exp(2*w^3+w)", "exp(2*w^3+w)*ln(w)",
                           "exp(2*w^3+w)*w"};
  for (std::size_t i = 0; i + 1 < std::size(shifted); ++i)
    require(compare(P(shifted[i]), P(shifted[i + 1])) == Ordering::Less,
            std::string(shifted[i]) + " < " + shifted[i + 1]);
  // The lowered family sits below, the raised family above, every
  // polynomial adjustment of exp(2w^3).
  require(compare(P("exp(2*w^3-w)*w"), P("exp(2*w^3)/w")) == Ordering::Less,
          "exp(2w^3-w)*w < exp(2w^3)/w");
  require(compare(P("exp(2*w^3)*w*ln(w)"), P("exp(2*w^3+w)/w")) == Ordering::Less,
          "exp(2w^3)*w*ln(w) < exp(2w^3+w)/w");
  // Generation 2 parameterized ordering at alpha = 2.
  require(compare(P("exp(2*w)"), P("exp(w^2)")) == Ordering::Less,
          "exp(2w) < exp(w^2)");
}

// ---- criterion 4: numeric/symbolic agreement on random pairs ---------------

void criterion_numeric_agreement() {
  gen::Rng rng(424242);
  auto sched = default_schedule();
  int agreed = 0;
  for (int i = 0; i < 500; ++i) {
    Prototype a = gen::random_prototype(rng, 3);
    Prototype b = gen::random_prototype(rng, 3);
    NumericComparison nc = numeric_compare(a, b, sched);
    Ordering sym = compare(a, b);
    if (nc.stable && nc.verdict == sym) {
      ++agreed;
    } else {
      RenderOptions ropts;
      std::ostringstream msg;
      msg << "disagreement on pair " << i << ": " << render(a, ropts) << " vs "
          << render(b, ropts) << " (symbolic " << to_symbol(sym) << ", numeric "
          << to_symbol(nc.verdict) << (nc.stable ? ", stable" : ", unstable")
          << ")";
      throw Failure(msg.str());
    }
  }
  require(agreed == 500, "500/500 stable agreements");
}

// ---- criterion 5: field axioms under fuzzing -------------------------------

void criterion_field_axioms() {
  gen::Rng rng(5150);
  for (int i = 0; i < 10000; ++i) {
    InNumber a = gen::random_in_number(rng, 3, 2);
    InNumber b = gen::random_in_number(rng, 3, 2);
    InNumber c = gen::random_in_number(rng, 3, 2);
    require(in_equal(in_add(a, b), in_add(b, a)), "commutative +");
    require(in_equal(in_mul(a, b), in_mul(b, a)), "commutative *");
    require(in_equal(in_add(in_add(a, b), c), in_add(a, in_add(b, c))),
            "associative +");
    require(in_equal(in_mul(in_mul(a, b), c), in_mul(a, in_mul(b, c))),
            "associative *");
    require(in_equal(in_mul(a, in_add(b, c)), in_add(in_mul(a, b), in_mul(a, c))),
            "distributive");
    require(in_equal(in_add(a, InNumber::zero()), a), "additive identity");
    require(in_equal(in_mul(a, InNumber::one()), a), "multiplicative identity");
    require(in_add(a, in_neg(a)).is_zero(), "additive inverse");
    if (!a.is_zero())
      require(in_equal(in_mul(a, in_inv(a)), InNumber::one()),
              "multiplicative inverse");
    Ordering ab = in_compare(a, b);
    if (ab == Ordering::Greater) {
      require(in_compare(in_add(a, c), in_add(b, c)) == Ordering::Greater,
              "order respects +");
      if (in_compare(c, InNumber::zero()) == Ordering::Greater)
        require(in_compare(in_mul(a, c), in_mul(b, c)) == Ordering::Greater,
                "order respects *");
    }
    // Limit-level laws (everything except a multiplicative inverse).
    const Limit& x = a.num();
    const Limit& y = b.num();
    const Limit& z = c.num();
    require(lim_equal(lim_add(x, y), lim_add(y, x)), "limit commutative +");
    require(lim_equal(lim_mul(x, y), lim_mul(y, x)), "limit commutative *");
    require(lim_equal(lim_mul(x, lim_add(y, z)),
                      lim_add(lim_mul(x, y), lim_mul(x, z))),
            "limit distributive");
  }
  // No limit-level inverse: truncations of 1/(w+1) never reach exactly 1.
  Limit wp1 = Limit::from_terms(
      {Term(Scalar(1), Prototype::omega()), Term(Scalar(1), Prototype::unit())});
  InNumber inv = in_inv(InNumber::from_limit(wp1));
  for (int d = 1; d <= 6; ++d)
    require(!lim_equal(lim_mul(truncate(inv, d), wp1), Limit::one()),
            "no finite-term inverse of w+1");
}

// ---- criterion 6: agreement with classical limits --------------------------

void criterion_cauchy_agreement() {
  struct Case { const char* expr; double limit; };
  const Case corpus[] = {
      {"(3*n^2+n)/(n^2+1)", 3.0},
      {"(n+1)/(n-1)", 1.0},
      {"n*ln(1+1/n)", 1.0},
      {"n*(exp(1/n)-1)", 1.0},
      {"(n^2+2*n)/(2*n^2+1)", 0.5},
      {"(5*n^3-n)/(n^3+n^2)", 5.0},
      {"(n+2)/(2*n-3)", 0.5},
      {"7", 7.0},
      {"(4*n^2+n)/n^2", 4.0},
      {"(1+1/n)^3", 1.0},
      {"n/(n+ln(n))", 1.0},
      {"n*(exp(2/n)-1)", 2.0},
      {"sin(1/n)*n", 1.0},
      {"(1-cos(1/n))*2*n^2", 1.0},
      {"cos(1/n)", 1.0},
      {"exp(1/n)", 1.0},
      {"(2*n+5)/(n+1)", 2.0},
      {"(n^2-1)/(n^2+1)", 1.0},
      {"n-(n^2-n)^0.5", 0.5},
      {"(6*n^4+n^2)/(3*n^4+n)", 2.0},
  };
  int count = 0;
  for (const auto& c : corpus) {
    SeqExprPtr e = S(c.expr);
    auto lead = leading_term_limit(e);
    require(lead.has_value(), std::string(c.expr) + " has a leading term");
    require(lead->proto().is_unit_form(),
            std::string(c.expr) + " has a unit-class leading term");
    double got = lead->coeff().to_double();
    require(std::fabs(got - c.limit) < 1e-9,
            std::string(c.expr) + " symbolic value");
    long double numeric = oracles::eval_ld(e, 1e8L);
    require(std::fabs(static_cast<double>(numeric) - got) < 1e-6,
            std::string(c.expr) + " numeric agreement at n = 1e8");
    ++count;
  }
  require(count == 20, "20 corpus expressions");
}

// ---- criterion 7: expansion correctness -------------------------------------

void criterion_expansions() {
  Prototype w = Prototype::omega();
  auto expect = [&](std::initializer_list<std::pair<long long, Scalar>> items) {
    std::vector<Term> ts;
    for (auto& [e, c] : items)
      ts.emplace_back(c, e == 0 ? Prototype::unit() : pow(w, Scalar(e)));
    return Limit::from_terms(std::move(ts));
  };
  SeqExprPtr ln_expr = S("n*ln(1+1/n)");
  InNumber a = limit_of(ln_expr, 3);
  require(lim_equal(truncate(a, 3),
                    expect({{0, Scalar(1)},
                            {-1, Scalar::ratio(-1, 2)},
                            {-2, Scalar::ratio(1, 3)}})),
          "n*ln(1+1/n) expands to 1 - 1/2w + 1/3w^2");
  SeqExprPtr rat_expr = S("(n+1)/(n-1)");
  InNumber b = limit_of(rat_expr, 3);
  require(lim_equal(truncate(b, 3),
                    expect({{0, Scalar(1)}, {-1, Scalar(2)}, {-2, Scalar(2)}})),
          "(n+1)/(n-1) expands to 1 + 2/w + 2/w^2");
  // Independent oracles.
  auto geo = oracles::divide(oracles::poly({{1, 1}, {0, 1}}),
                             oracles::poly({{1, 1}, {0, -1}}), 3);
  {
    auto it = geo.begin();
    require(it->first == 0 && it->second == 1, "oracle term 1");
    ++it;
    require(it->first == -1 && it->second == 2, "oracle term 2");
    ++it;
    require(it->first == -2 && it->second == 2, "oracle term 3");
  }
  auto mac = oracles::mul(
      oracles::poly({{1, 1}}),
      oracles::power_series_apply(oracles::poly({{-1, 1}}), 5,
                                  oracles::ln1p_coeff));
  {
    auto it = mac.begin();
    require(it->first == 0 && it->second == 1, "maclaurin term 1");
    ++it;
    require(it->first == -1 && it->second == oracles::Rat(-1, 2),
            "maclaurin term 2");
    ++it;
    require(it->first == -2 && it->second == oracles::Rat(1, 3),
            "maclaurin term 3");
  }
  // Numeric residual decay: the depth-3 truncation error shrinks like the
  // next class (w^-3) across n = 1e3, 1e4, 1e5.
  for (auto [expr, value] : {std::pair<SeqExprPtr, InNumber>{ln_expr, a},
                             std::pair<SeqExprPtr, InNumber>{rat_expr, b}}) {
    Limit t = truncate(value, 3);
    long double prev = 0;
    bool first = true;
    for (long double n : {1e3L, 1e4L, 1e5L}) {
      long double approx = 0;
      for (const auto& term : t.terms()) {
        long double tv = term.coeff().to_double();
        if (!term.proto().is_unit_form())
          tv *= std::pow(n, (long double)term.proto().factors()[0].exponent.to_double());
        approx += tv;
      }
      long double resid = std::fabs(oracles::eval_ld(expr, n) - approx);
      if (!first)
        require(resid < prev / 100.0L,
                "residual decays by at least 1e2 per decade");
      prev = resid;
      first = false;
    }
  }
}

// ---- criterion 8: oscillatory classification --------------------------------

void criterion_oscillatory() {
  bool sin_rejected = false;
  try {
    limit_of(S("sin(n)"), 2);
  } catch (const OscillatoryError&) {
    sin_rejected = true;
  }
  require(sin_rejected, "sin(n) rejected at depth 2");
  bool mix_rejected = false;
  try {
    limit_of(S("exp(n)+sin(n)"), 2);
  } catch (const OscillatoryError&) {
    mix_rejected = true;
  }
  require(mix_rejected, "exp(n)+sin(n) rejected at depth 2");
  InNumber lead = limit_of(S("exp(n)+sin(n)"), 1);
  auto lt = leading_term(lead);
  require(lt.has_value() && lt->coeff() == Scalar(1) &&
              proto_equal(lt->proto(),
                          exp_of(InNumber::from_proto(Prototype::omega()))),
          "exp(n)+sin(n) at depth 1 yields 1*exp(w)");
}

// ---- criterion 9: feedback rule ---------------------------------------------

void criterion_feedback() {
  Prototype w = Prototype::omega();
  Prototype ew = exp_of(InNumber::from_proto(w));
  Limit wp1 = Limit::from_terms({Term(Scalar(1), w), Term(Scalar(1), Prototype::unit())});
  InNumber arg(Limit::single(Scalar(1), ew), wp1);
  Prototype p = exp_of(arg);
  Prototype lower = exp_of(InNumber::from_limit(Limit::from_terms(
      {Term(Scalar(1), div(ew, w)), Term(Scalar(-1), div(ew, pow(w, Scalar(2))))})));
  Prototype upper = exp_of(InNumber::from_proto(div(ew, w)));
  require(compare(p, lower) == Ordering::Greater, "above the odd partial sum");
  require(compare(p, upper) == Ordering::Less, "below the even partial sum");
  require(is_infinite(div(p, lower)), "ratio to the lower neighbour is infinite");
  require(is_infinitesimal(div(p, upper)),
          "ratio to the upper neighbour is infinitesimal");
}

// ---- criterion 10: fit oracle -----------------------------------------------

void criterion_fit() {
  std::vector<Sample> quad;
  for (std::uint64_t n = 16; n <= 65536; n *= 2)
    quad.emplace_back(n, 3.0 * n * n + 5.0 * n);
  FitResult fit = estimate_leading_term(
      quad, {P("w"), P("w^2"), P("w^3")});
  require(proto_equal(fit.proto, P("w^2")), "quadratic class recovered");
  require(std::fabs(fit.coefficient - 3.0) < 0.05, "coefficient near 3");
  std::vector<Sample> osc;
  for (std::uint64_t n = 16; n <= 65536; n *= 2)
    osc.emplace_back(n, std::sin(static_cast<double>(n)));
  bool rejected = false;
  try {
    estimate_leading_term(osc, {P("1"), P("w"), P("1/w")});
  } catch (const NoStableCandidate&) {
    rejected = true;
  }
  require(rejected, "sin(n) samples give NoStableCandidate");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "generation 1 ordering", 1.0, criterion_generation1},
      {2, "generation 2 golden chain", 1.0, criterion_generation2},
      {3, "generation 3 golden chain", 5.0, criterion_generation3},
      {4, "numeric/symbolic agreement (500 pairs)", 30.0,
       criterion_numeric_agreement},
      {5, "field-axiom fuzz (10^4 triples)", 60.0, criterion_field_axioms},
      {6, "Cauchy agreement (20 expressions)", 5.0, criterion_cauchy_agreement},
      {7, "expansion correctness", 5.0, criterion_expansions},
      {8, "oscillatory classification", 1.0, criterion_oscillatory},
      {9, "feedback rule", 1.0, criterion_feedback},
      {10, "fit oracle", 1.0, criterion_fit},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool in_budget = elapsed < c.budget_seconds;
    bool pass = error.empty() && in_budget;
    if (!pass) ++failures;
    std::ostringstream line;
    line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
         << c.name << " (" << elapsed << "s, budget " << c.budget_seconds
         << "s)";
    if (!error.empty()) line << " -- " << error;
    if (error.empty() && !in_budget) line << " -- over budget";
    std::cout << line.str() << std::endl;
  }
  if (failures == 0)
    std::cout << "all 10 acceptance criteria passed" << std::endl;
  else
    std::cout << failures << " acceptance criteria failed" << std::endl;
  return failures;
}
