#pragma once

#include <optional>

#include "omegalim/limit.hpp"

namespace omegalim {

// Element of the ratio field: num / den with den != 0. Construction
// normalizes the denominator's leading coefficient to 1 and cancels the
// common leading prototype factor where one exists; equality is decided by
// cross-multiplication, never by form.
class InNumber {
public:
  InNumber() : den_(Limit::one()) {}  // zero

  InNumber(Limit num, Limit den);

  static InNumber zero() { return InNumber(); }
  static InNumber one() { return from_limit(Limit::one()); }
  static InNumber from_limit(Limit num);
  static InNumber from_term(Term t);
  static InNumber from_scalar(Scalar c);
  static InNumber from_proto(Prototype p);

  const Limit& num() const { return num_; }
  const Limit& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // num is c * unit and den is 1.
  std::optional<Scalar> as_constant() const;
  bool has_tower() const { return num_.has_tower() || den_.has_tower(); }

private:
  struct already_normalized {};
  InNumber(Limit num, Limit den, already_normalized)
      : num_(std::move(num)), den_(std::move(den)) {}
  friend InNumber in_neg(const InNumber& a);
  friend InNumber in_scale(const InNumber& a, const Scalar& c);
  Limit num_;
  Limit den_;
};

InNumber in_add(const InNumber& a, const InNumber& b);
InNumber in_sub(const InNumber& a, const InNumber& b);
InNumber in_neg(const InNumber& a);
InNumber in_mul(const InNumber& a, const InNumber& b);
InNumber in_inv(const InNumber& a);  // throws DivisionByZero on zero
InNumber in_div(const InNumber& a, const InNumber& b);
InNumber in_scale(const InNumber& a, const Scalar& c);
InNumber in_pow_int(const InNumber& a, long long k);
Ordering in_compare(const InNumber& a, const InNumber& b);
bool in_equal(const InNumber& a, const InNumber& b);
bool in_structural_equal(const InNumber& a, const InNumber& b);

// Long-division expansion to at most `depth` terms (fewer when the
// expansion terminates). The discarded remainder's class is strictly below
// the class of the last emitted term.
Limit truncate(const InNumber& x, int depth);

// First expansion term; nullopt for zero.
std::optional<Term> leading_term(const InNumber& x);
// i-th expansion term, 1-based; nullopt when the expansion terminates
// before position i.
std::optional<Term> term_at(const InNumber& x, int i);

// Decomposition x = infinite + finite + small where every expansion term of
// `infinite` lies in an infinite class, `finite` is the coefficient at the
// class of 1, and every term of `small` lies in an infinitesimal class.
// Throws UndefinedError when the expansion cannot be resolved within the
// internal step budget.
struct MagnitudeParts {
  InNumber infinite;
  Scalar finite;
  InNumber small;
};
MagnitudeParts split_by_magnitude(const InNumber& x);

// True iff every expansion term of x lies in an infinite class (vacuously
// true for zero).
bool purely_infinite_expansion(const InNumber& x);

// Long-division view: true iff every term of the exact expansion of r / den
// lies in an infinite class. den must be nonzero with leading coefficient 1.
bool expansion_all_infinite(const Limit& r, const Limit& den);

}  // namespace omegalim
