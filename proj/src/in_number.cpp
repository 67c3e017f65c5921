#include "omegalim/in_number.hpp"

#include <cstddef>

#include "omegalim/errors.hpp"

namespace omegalim {

namespace {

// Budget for long-division loops. Expansions that neither terminate nor
// reach a decision within this many steps raise UndefinedError.
constexpr int kDivisionBudget = 256;

// Componentwise common factor of two prototypes: for each base present in
// both with same-sign exponents, the smaller magnitude. Used only as a
// cosmetic normalization of ratios.
Prototype common_leading_factor(const Prototype& a, const Prototype& b) {
  std::vector<Factor> out;
  for (const auto& fa : a.factors()) {
    for (const auto& fb : b.factors()) {
      if (!atom_equal(fa.base, fb.base)) continue;
      if (fa.exponent.sign() != fb.exponent.sign()) break;
      Scalar mag = fa.exponent.abs() < fb.exponent.abs() ? fa.exponent.abs()
                                                         : fb.exponent.abs();
      out.push_back({fa.base, fa.exponent.sign() < 0 ? -mag : mag});
      break;
    }
  }
  return Prototype::from_factors(std::move(out));
}

Limit divide_terms_by(const Limit& l, const Prototype& g) {
  std::vector<Term> out;
  out.reserve(l.terms().size());
  for (const auto& t : l.terms())
    out.emplace_back(t.coeff(), div(t.proto(), g));
  return Limit::from_terms(std::move(out));
}

// One long-division step: the exact leading term of r / den (den's leading
// coefficient is 1).
Term division_step(const Limit& r, const Limit& den) {
  return Term(r.leading().coeff(),
              div(r.leading().proto(), den.leading().proto()));
}

Limit subtract_quotient_term(const Limit& r, const Limit& den, const Term& t) {
  return lim_sub(r, mul_term(den, t));
}

}  // namespace

// The expansion's classes are products g * tau_1^k1 * ... with g ranging
// over the term classes of r / lead(den) and tau_j the infinitesimal tail
// ratios of den; g dominating every power of the largest inverse ratio
// bounds them all.
bool expansion_all_infinite(const Limit& r, const Limit& den) {
  if (r.is_zero()) return true;
  const Prototype& qlead = den.leading().proto();
  if (den.terms().size() == 1) {
    for (const auto& t : r.terms())
      if (!is_infinite(div(t.proto(), qlead))) return false;
    return true;
  }
  Prototype tau_min = div(den.terms().back().proto(), qlead);
  Prototype inv_tau = pow(tau_min, Scalar(-1));
  auto log_inv = leading_term(log_of(inv_tau));
  for (const auto& t : r.terms()) {
    Prototype gamma = div(t.proto(), qlead);
    if (!is_infinite(gamma)) return false;
    auto log_gamma = leading_term(log_of(gamma));
    if (!log_gamma || !log_inv) return false;
    if (compare(log_gamma->proto(), log_inv->proto()) != Ordering::Greater)
      return false;
  }
  return true;
}

InNumber::InNumber(Limit num, Limit den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("denominator limit is zero");
  if (num_.is_zero()) {
    den_ = Limit::one();
    return;
  }
  if (den_.terms().size() == 1) {
    // Division by a single term is exact; fold it into the numerator.
    // Division by a fixed class preserves the strict term order.
    const Term d = den_.leading();
    den_ = Limit::one();
    if (d.coeff().is_one() && d.proto().is_unit_form()) return;
    if (d.proto().is_unit_form()) {
      num_ = lim_scale(num_, d.coeff().inverse());
      return;
    }
    num_ = mul_term(num_, Term(d.coeff().inverse(), pow(d.proto(), Scalar(-1))));
    return;
  }
  const Scalar& c = den_.leading().coeff();
  if (!c.is_one()) {
    Scalar inv = c.inverse();
    num_ = lim_scale(num_, inv);
    den_ = lim_scale(den_, inv);
  }
  Prototype g =
      common_leading_factor(num_.leading().proto(), den_.leading().proto());
  if (!g.is_unit_form()) {
    num_ = divide_terms_by(num_, g);
    den_ = divide_terms_by(den_, g);
  }
}

InNumber InNumber::from_limit(Limit num) {
  return InNumber(std::move(num), Limit::one());
}

InNumber InNumber::from_term(Term t) {
  return from_limit(Limit::single(std::move(t)));
}

InNumber InNumber::from_scalar(Scalar c) {
  return from_limit(Limit::constant(std::move(c)));
}

InNumber InNumber::from_proto(Prototype p) {
  return from_term(Term(Scalar(1), std::move(p)));
}

std::optional<Scalar> InNumber::as_constant() const {
  if (!den_.is_one()) return std::nullopt;
  return num_.as_constant();
}

InNumber in_add(const InNumber& a, const InNumber& b) {
  if (a.den().is_one() && b.den().is_one())
    return InNumber::from_limit(lim_add(a.num(), b.num()));
  return InNumber(lim_add(lim_mul(a.num(), b.den()), lim_mul(b.num(), a.den())),
                  lim_mul(a.den(), b.den()));
}

InNumber in_sub(const InNumber& a, const InNumber& b) {
  return in_add(a, in_neg(b));
}

// Scaling the numerator keeps the constructor's normalization intact (the
// denominator and the leading prototypes are untouched).
InNumber in_neg(const InNumber& a) {
  if (a.is_zero()) return a;
  return InNumber(lim_neg(a.num()), a.den(), InNumber::already_normalized{});
}

InNumber in_mul(const InNumber& a, const InNumber& b) {
  return InNumber(lim_mul(a.num(), b.num()), lim_mul(a.den(), b.den()));
}

InNumber in_inv(const InNumber& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  return InNumber(a.den(), a.num());
}

InNumber in_div(const InNumber& a, const InNumber& b) {
  return in_mul(a, in_inv(b));
}

InNumber in_scale(const InNumber& a, const Scalar& c) {
  if (c.is_zero() || a.is_zero()) return InNumber::zero();
  return InNumber(lim_scale(a.num(), c), a.den(),
                  InNumber::already_normalized{});
}

InNumber in_pow_int(const InNumber& a, long long k) {
  if (k == 0) return InNumber::one();
  InNumber base = k < 0 ? in_inv(a) : a;
  unsigned long long n =
      k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
            : static_cast<unsigned long long>(k);
  InNumber result = InNumber::one();
  while (n > 0) {
    if (n & 1ull) result = in_mul(result, base);
    base = in_mul(base, base);
    n >>= 1;
  }
  return result;
}

Ordering in_compare(const InNumber& a, const InNumber& b) {
  // Denominators carry leading coefficient 1, hence are eventually positive.
  if (a.den().is_one() && b.den().is_one()) return lim_compare(a.num(), b.num());
  return lim_compare(lim_mul(a.num(), b.den()), lim_mul(b.num(), a.den()));
}

bool in_equal(const InNumber& a, const InNumber& b) {
  if (a.den().is_one() && b.den().is_one()) return lim_equal(a.num(), b.num());
  return lim_equal(lim_mul(a.num(), b.den()), lim_mul(b.num(), a.den()));
}

bool in_structural_equal(const InNumber& a, const InNumber& b) {
  return lim_equal(a.num(), b.num()) && lim_equal(a.den(), b.den());
}

Limit truncate(const InNumber& x, int depth) {
  if (depth < 1) throw UndefinedError("truncation depth must be positive");
  std::vector<Term> out;
  Limit r = x.num();
  while (static_cast<int>(out.size()) < depth && !r.is_zero()) {
    Term t = division_step(r, x.den());
    r = subtract_quotient_term(r, x.den(), t);
    out.push_back(std::move(t));
  }
  return Limit::from_terms(std::move(out));
}

std::optional<Term> leading_term(const InNumber& x) {
  if (x.is_zero()) return std::nullopt;
  return division_step(x.num(), x.den());
}

std::optional<Term> term_at(const InNumber& x, int i) {
  if (i < 1) throw UndefinedError("term index is 1-based");
  Limit r = x.num();
  for (int k = 1; !r.is_zero(); ++k) {
    Term t = division_step(r, x.den());
    if (k == i) return t;
    r = subtract_quotient_term(r, x.den(), t);
  }
  return std::nullopt;
}

MagnitudeParts split_by_magnitude(const InNumber& x) {
  MagnitudeParts parts{InNumber::zero(), Scalar(0), InNumber::zero()};
  if (x.is_zero()) return parts;
  Limit r = x.num();
  const Limit& den = x.den();
  std::vector<Term> inf_terms;
  InNumber inf_tail = InNumber::zero();
  int budget = kDivisionBudget + static_cast<int>(r.terms().size());
  int step = 0;
  for (; step < budget && !r.is_zero(); ++step) {
    Term t = division_step(r, den);
    Ordering cls = compare(t.proto(), Prototype::unit());
    if (cls != Ordering::Greater) break;
    if (expansion_all_infinite(r, den)) {
      inf_tail = InNumber(r, den);
      r = Limit::zero();
      break;
    }
    inf_terms.push_back(t);
    r = subtract_quotient_term(r, den, t);
  }
  if (step == budget && !r.is_zero())
    throw UndefinedError("expansion did not resolve within the step budget");
  if (!r.is_zero()) {
    Term t = division_step(r, den);
    if (compare(t.proto(), Prototype::unit()) == Ordering::Equal) {
      parts.finite = t.coeff();
      r = subtract_quotient_term(r, den, t);
    }
  }
  parts.infinite = in_add(
      InNumber::from_limit(Limit::from_terms(std::move(inf_terms))), inf_tail);
  parts.small = r.is_zero() ? InNumber::zero() : InNumber(r, den);
  return parts;
}

bool purely_infinite_expansion(const InNumber& x) {
  if (x.is_zero()) return true;
  MagnitudeParts parts = split_by_magnitude(x);
  return parts.finite.is_zero() && parts.small.is_zero();
}

}  // namespace omegalim
