#include "omegalim/limit.hpp"

#include <algorithm>

#include "omegalim/errors.hpp"

namespace omegalim {

Term::Term(Scalar coeff, Prototype proto)
    : coeff_(std::move(coeff)), proto_(std::move(proto)) {
  if (coeff_.is_zero()) throw Error("term with zero coefficient");
}

bool term_equal(const Term& a, const Term& b) {
  return a.coeff() == b.coeff() && proto_equal(a.proto(), b.proto());
}

Limit Limit::constant(Scalar c) {
  if (c.is_zero()) return Limit();
  return single(std::move(c), Prototype::unit());
}

Limit Limit::single(Scalar coeff, Prototype proto) {
  if (coeff.is_zero()) return Limit();
  std::vector<Term> t;
  t.emplace_back(std::move(coeff), std::move(proto));
  return Limit(std::move(t));
}

Limit Limit::single(Term t) {
  std::vector<Term> v;
  v.push_back(std::move(t));
  return Limit(std::move(v));
}

Limit Limit::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare(a.proto(), b.proto()) == Ordering::Greater;
  });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() &&
        compare(merged.back().proto(), t.proto()) == Ordering::Equal) {
      Scalar c = merged.back().coeff() + t.coeff();
      merged.pop_back();
      if (!c.is_zero()) merged.emplace_back(std::move(c), t.proto());
    } else {
      merged.push_back(std::move(t));
    }
  }
  return Limit(std::move(merged));
}

bool Limit::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff().is_one() &&
         terms_[0].proto().is_unit_form();
}

std::optional<Scalar> Limit::as_constant() const {
  if (terms_.empty()) return Scalar(0);
  if (terms_.size() == 1 && terms_[0].proto().is_unit_form())
    return terms_[0].coeff();
  return std::nullopt;
}

bool Limit::purely_infinite() const {
  for (const auto& t : terms_)
    if (!is_infinite(t.proto())) return false;
  return true;
}

bool Limit::has_tower() const {
  for (const auto& t : terms_)
    if (t.proto().has_tower()) return true;
  return false;
}

// Merge of two class-sorted term lists; coefficients of equal classes add.
Limit merge_term_lists(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Ordering o = compare(a[i].proto(), b[j].proto());
    if (o == Ordering::Greater) {
      out.push_back(a[i++]);
    } else if (o == Ordering::Less) {
      out.push_back(b[j++]);
    } else {
      Scalar c = a[i].coeff() + b[j].coeff();
      if (!c.is_zero()) out.emplace_back(std::move(c), a[i].proto());
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return Limit(std::move(out));
}

Limit scale_terms(const Limit& a, const Scalar& c) {
  if (c.is_zero()) return Limit::zero();
  std::vector<Term> out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) out.emplace_back(t.coeff() * c, t.proto());
  return Limit(std::move(out));
}

// a * (single term); class order is preserved by multiplication with a
// fixed class, so the result list stays sorted.
Limit mul_term(const Limit& a, const Term& t) {
  std::vector<Term> out;
  out.reserve(a.terms().size());
  for (const auto& s : a.terms())
    out.emplace_back(s.coeff() * t.coeff(), mul(s.proto(), t.proto()));
  return Limit(std::move(out));
}

Limit lim_add(const Limit& a, const Limit& b) {
  return merge_term_lists(a.terms(), b.terms());
}

Limit lim_neg(const Limit& a) { return scale_terms(a, Scalar(-1)); }

Limit lim_sub(const Limit& a, const Limit& b) {
  return lim_add(a, lim_neg(b));
}

Limit lim_scale(const Limit& a, const Scalar& c) { return scale_terms(a, c); }

Limit lim_mul(const Limit& a, const Limit& b) {
  if (a.is_zero() || b.is_zero()) return Limit::zero();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Limit acc;
  for (const auto& t : b.terms()) acc = lim_add(acc, mul_term(a, t));
  return acc;
}

Ordering lim_compare(const Limit& a, const Limit& b) {
  Limit d = lim_sub(a, b);
  if (d.is_zero()) return Ordering::Equal;
  return ordering_from_sign(d.leading().coeff().sign());
}

bool lim_equal(const Limit& a, const Limit& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i)
    if (!term_equal(ta[i], tb[i])) return false;
  return true;
}

}  // namespace omegalim
