#pragma once

#include <memory>
#include <vector>

#include "omegalim/ordering.hpp"
#include "omegalim/scalar.hpp"

namespace omegalim {

class Limit;
class InNumber;
class Term;

enum class TowerDir { Exp, Log };

// One base of the log-exp hierarchy:
//   Log(k)   -- ln applied k times to w (k = 0 is w itself)
//   Exp(arg) -- exp(arg) for a purely infinite argument with leading
//               coefficient 1; leading scalars are folded into the factor
//               exponent by the canonicalizer
//   Tower    -- exp^w(w) or ln^w(w), the transfinite-height extremes
class BaseAtom {
public:
  enum class Kind { Log, Exp, Tower };

  static BaseAtom log_base(int depth);
  static BaseAtom omega() { return log_base(0); }
  static BaseAtom exp_base(InNumber arg);
  static BaseAtom tower(TowerDir dir);

  Kind kind() const { return kind_; }
  int log_depth() const { return depth_; }
  const InNumber& exp_arg() const { return *arg_; }
  TowerDir tower_dir() const { return dir_; }

private:
  BaseAtom() = default;
  Kind kind_ = Kind::Log;
  int depth_ = 0;
  TowerDir dir_ = TowerDir::Exp;
  std::shared_ptr<const InNumber> arg_;
};

// Structural identity (canonical forms are compared componentwise).
bool atom_equal(const BaseAtom& a, const BaseAtom& b);

// Total order of the bases themselves viewed as growth classes.
Ordering base_compare(const BaseAtom& a, const BaseAtom& b);

struct Factor {
  BaseAtom base;
  Scalar exponent;  // nonzero
};

// Canonical monomial over the base hierarchy; the unique representative of
// one Archimedean class. Factors are stored strictly decreasing under
// base_compare with pairwise distinct bases and nonzero exponents. The empty
// product is the unit prototype (the class of the nonzero reals).
class Prototype {
public:
  Prototype() = default;  // unit

  static Prototype unit() { return Prototype(); }
  static Prototype omega() { return log_atom(0); }
  static Prototype log_atom(int depth);
  static Prototype exp_tower();
  static Prototype log_tower();
  // Canonicalizes an arbitrary factor list (merges duplicate bases, merges
  // exponential factors through their arguments, sorts, drops zeros).
  static Prototype from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit_form() const { return factors_.empty(); }
  bool has_tower() const;
  // Exponent of the given tower direction, zero when absent.
  Scalar tower_exponent(TowerDir dir) const;
  Prototype without_towers() const;
  bool pure_log_form() const;  // every base is a Log atom

private:
  explicit Prototype(std::vector<Factor> f) : factors_(std::move(f)) {}
  friend Prototype canonicalize_factors(std::vector<Factor> factors);
  std::vector<Factor> factors_;
};

bool proto_equal(const Prototype& a, const Prototype& b);

// Decidable total order of Archimedean classes. Equal means same class,
// which for canonical inputs coincides with structural identity.
Ordering compare(const Prototype& p, const Prototype& q);

Prototype mul(const Prototype& p, const Prototype& q);
Prototype div(const Prototype& p, const Prototype& q);
// Requires a != 0.
Prototype pow(const Prototype& p, const Scalar& a);

// Exact logarithm: sum of exponent * ln(base) over the factors.
// ln(Log(k)) = Log(k+1), ln(Exp(A)) = A, and tower atoms are fixed points
// (removing one level from a transfinite tower leaves the tower).
InNumber log_of(const Prototype& p);

// Inverse of log_of on admissible arguments: the argument must be purely
// infinite (every expansion term lies in an infinite class) with positive
// leading coefficient. Terms of the shape c * ln^k(w) with k >= 1 reduce to
// ln^(k-1)(w)^c; the irreducible remainder becomes a single Exp base.
// exp_of(0) = unit.
Prototype exp_of(const InNumber& arg);

// Total version used internally: accepts any sign of leading coefficient
// (folded into the factor exponent). Still requires a purely infinite or
// zero argument.
Prototype exp_of_any(const InNumber& arg);

// f^g as a class: exp_of(g * log_of(f)). Collapses to unit when the
// exponent product has no infinite part (e.g. w^(1/w)). Throws
// FeedbackConditionViolated when the product cannot be resolved.
Prototype pow_by_limit(const Prototype& f, const InNumber& g);

// True iff ln(f) exceeds every integer power of t. t must be positive with
// no infinitesimal terms. Decided by a single class comparison of iterated
// logarithms.
bool dominates_all_powers(const Prototype& f, const Limit& t);

// Exp-tower height of the dominant factor: Log(k) -> -k, Exp at argument
// height h -> h+1, towers saturate to the int range, unit -> 0.
int cardinal_height(const Prototype& p);
inline constexpr int kExpTowerHeight = 2147483647;
inline constexpr int kLogTowerHeight = -2147483647 - 1;

bool is_infinite(const Prototype& p);
bool is_infinitesimal(const Prototype& p);
bool is_unit(const Prototype& p);

}  // namespace omegalim
