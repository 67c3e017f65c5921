#pragma once

#include <optional>
#include <vector>

#include "omegalim/prototype.hpp"

namespace omegalim {

// One summand c * p of a limit: nonzero real coefficient times a class
// prototype.
class Term {
public:
  Term(Scalar coeff, Prototype proto);

  const Scalar& coeff() const { return coeff_; }
  const Prototype& proto() const { return proto_; }

private:
  Scalar coeff_;
  Prototype proto_;
};

bool term_equal(const Term& a, const Term& b);

// Finite sum of terms with strictly decreasing classes; the empty sum is
// zero. Values are immutable.
class Limit {
public:
  Limit() = default;  // zero

  static Limit zero() { return Limit(); }
  static Limit constant(Scalar c);
  static Limit one() { return constant(Scalar(1)); }
  static Limit single(Scalar coeff, Prototype proto);
  static Limit single(Term t);
  // Sorts and merges an arbitrary term list.
  static Limit from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }
  bool is_one() const;
  // Single term c * unit?
  std::optional<Scalar> as_constant() const;
  // Every term's class is infinite.
  bool purely_infinite() const;
  bool has_tower() const;

private:
  explicit Limit(std::vector<Term> t) : terms_(std::move(t)) {}
  friend Limit merge_term_lists(const std::vector<Term>& a,
                                const std::vector<Term>& b);
  friend Limit scale_terms(const Limit& a, const Scalar& c);
  friend Limit mul_term(const Limit& a, const Term& t);
  std::vector<Term> terms_;
};

// Internal building blocks shared by the ratio machinery.
Limit merge_term_lists(const std::vector<Term>& a, const std::vector<Term>& b);
Limit scale_terms(const Limit& a, const Scalar& c);
Limit mul_term(const Limit& a, const Term& t);

Limit lim_add(const Limit& a, const Limit& b);
Limit lim_neg(const Limit& a);
Limit lim_sub(const Limit& a, const Limit& b);
Limit lim_mul(const Limit& a, const Limit& b);
Limit lim_scale(const Limit& a, const Scalar& c);
// Lexicographic on successive (class, coefficient) pairs of a - b.
Ordering lim_compare(const Limit& a, const Limit& b);
bool lim_equal(const Limit& a, const Limit& b);

}  // namespace omegalim
