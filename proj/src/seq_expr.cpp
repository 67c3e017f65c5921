#include "omegalim/seq_expr.hpp"

namespace omegalim {

SeqExprPtr SeqExpr::constant(Scalar c) {
  return SeqExprPtr(new SeqExpr(Op::Const, std::move(c), nullptr, nullptr));
}
SeqExprPtr SeqExpr::index() {
  return SeqExprPtr(new SeqExpr(Op::Index, Scalar(0), nullptr, nullptr));
}
SeqExprPtr SeqExpr::add(SeqExprPtr l, SeqExprPtr r) {
  return SeqExprPtr(new SeqExpr(Op::Add, Scalar(0), std::move(l), std::move(r)));
}
SeqExprPtr SeqExpr::sub(SeqExprPtr l, SeqExprPtr r) {
  return SeqExprPtr(new SeqExpr(Op::Sub, Scalar(0), std::move(l), std::move(r)));
}
SeqExprPtr SeqExpr::mul(SeqExprPtr l, SeqExprPtr r) {
  return SeqExprPtr(new SeqExpr(Op::Mul, Scalar(0), std::move(l), std::move(r)));
}
SeqExprPtr SeqExpr::div(SeqExprPtr l, SeqExprPtr r) {
  return SeqExprPtr(new SeqExpr(Op::Div, Scalar(0), std::move(l), std::move(r)));
}
SeqExprPtr SeqExpr::pow_const(SeqExprPtr base, Scalar exponent) {
  return SeqExprPtr(
      new SeqExpr(Op::PowConst, std::move(exponent), std::move(base), nullptr));
}
SeqExprPtr SeqExpr::exp(SeqExprPtr x) {
  return SeqExprPtr(new SeqExpr(Op::Exp, Scalar(0), std::move(x), nullptr));
}
SeqExprPtr SeqExpr::ln(SeqExprPtr x) {
  return SeqExprPtr(new SeqExpr(Op::Ln, Scalar(0), std::move(x), nullptr));
}
SeqExprPtr SeqExpr::sin(SeqExprPtr x) {
  return SeqExprPtr(new SeqExpr(Op::Sin, Scalar(0), std::move(x), nullptr));
}
SeqExprPtr SeqExpr::cos(SeqExprPtr x) {
  return SeqExprPtr(new SeqExpr(Op::Cos, Scalar(0), std::move(x), nullptr));
}
SeqExprPtr SeqExpr::tower_exp() {
  return SeqExprPtr(new SeqExpr(Op::TowerExp, Scalar(0), nullptr, nullptr));
}
SeqExprPtr SeqExpr::tower_log() {
  return SeqExprPtr(new SeqExpr(Op::TowerLog, Scalar(0), nullptr, nullptr));
}

}  // namespace omegalim
