#pragma once

#include <cstdint>
#include <vector>

#include "omegalim/in_number.hpp"
#include "omegalim/seq_expr.hpp"

namespace omegalim {

// Numeric magnitude sign * exp^height(mantissa) for overflow-free work with
// iterated exponentials. Invariants: height >= 0; mantissa >= 1 whenever
// height > 0; sign == 0 encodes exact zero. Magnitudes below the double
// range underflow to zero.
class TowerValue {
public:
  TowerValue() = default;  // zero

  static TowerValue of(double v);
  static TowerValue make(int sign, int height, double mantissa);

  int sign() const { return sign_; }
  int height() const { return height_; }
  double mantissa() const { return mantissa_; }
  bool is_zero() const { return sign_ == 0; }

  // Collapses to a plain double; +-inf past the representable range.
  double to_double() const;

private:
  int sign_ = 0;
  int height_ = 0;
  double mantissa_ = 0.0;
};

TowerValue tv_neg(const TowerValue& a);
TowerValue tv_abs(const TowerValue& a);
TowerValue tv_add(const TowerValue& a, const TowerValue& b);
TowerValue tv_sub(const TowerValue& a, const TowerValue& b);
TowerValue tv_mul(const TowerValue& a, const TowerValue& b);
TowerValue tv_div(const TowerValue& a, const TowerValue& b);
TowerValue tv_pow(const TowerValue& a, double r);
TowerValue tv_ln(const TowerValue& a);   // requires a > 0
TowerValue tv_exp(const TowerValue& a);

// Mantissas within 1e-12 relative at equal height compare Equal.
Ordering tv_compare(const TowerValue& a, const TowerValue& b);

// Value of the prototype at the finite index n (n >= 3), computed in the
// log domain. Throws TowerAtomNotEvaluable for tower atoms and DomainError
// when an inner logarithm is non-positive at this n.
TowerValue eval_proto(const Prototype& p, std::uint64_t n);
TowerValue eval_limit(const Limit& l, std::uint64_t n);
TowerValue eval_in_number(const InNumber& x, std::uint64_t n);
// Sin/Cos accept height-0 arguments only.
TowerValue eval_seq(const SeqExprPtr& e, std::uint64_t n);

// n in {10^2, ..., 10^9}.
std::vector<std::uint64_t> default_schedule();

struct NumericComparison {
  struct Sample {
    std::uint64_t n;
    Ordering ordering;
    bool resolved;  // false when evaluation failed or the sign was ambiguous
  };
  std::vector<Sample> samples;
  Ordering verdict;  // ordering at the last resolved point
  bool stable;       // resolved and constant over the trailing half
};

// Ordering estimate from finite evaluations along the schedule. The sign at
// each n comes from the exactly cancelled log-difference of the two
// prototypes, so classes that agree on their dominant monomials are still
// separated numerically.
NumericComparison numeric_compare(const Prototype& p, const Prototype& q,
                                  const std::vector<std::uint64_t>& schedule);

}  // namespace omegalim
