#pragma once

#include <memory>

#include "omegalim/scalar.hpp"

namespace omegalim {

class SeqExpr;
using SeqExprPtr = std::shared_ptr<const SeqExpr>;

// Immutable syntax tree of a sequence in the index variable. The same tree
// shape doubles as a class expression with the index read as w.
class SeqExpr {
public:
  enum class Op {
    Const,
    Index,
    Add,
    Sub,
    Mul,
    Div,
    PowConst,  // base ^ scalar exponent
    Exp,
    Ln,
    Sin,
    Cos,
    TowerExp,  // exp^w(w); class expressions only
    TowerLog,  // ln^w(w)
  };

  static SeqExprPtr constant(Scalar c);
  static SeqExprPtr index();
  static SeqExprPtr add(SeqExprPtr l, SeqExprPtr r);
  static SeqExprPtr sub(SeqExprPtr l, SeqExprPtr r);
  static SeqExprPtr mul(SeqExprPtr l, SeqExprPtr r);
  static SeqExprPtr div(SeqExprPtr l, SeqExprPtr r);
  static SeqExprPtr pow_const(SeqExprPtr base, Scalar exponent);
  static SeqExprPtr exp(SeqExprPtr x);
  static SeqExprPtr ln(SeqExprPtr x);
  static SeqExprPtr sin(SeqExprPtr x);
  static SeqExprPtr cos(SeqExprPtr x);
  static SeqExprPtr tower_exp();
  static SeqExprPtr tower_log();

  Op op() const { return op_; }
  const Scalar& value() const { return value_; }  // Const / PowConst exponent
  const SeqExprPtr& left() const { return left_; }
  const SeqExprPtr& right() const { return right_; }

private:
  SeqExpr(Op op, Scalar value, SeqExprPtr l, SeqExprPtr r)
      : op_(op), value_(std::move(value)), left_(std::move(l)),
        right_(std::move(r)) {}
  Op op_;
  Scalar value_;
  SeqExprPtr left_;
  SeqExprPtr right_;
};

}  // namespace omegalim
