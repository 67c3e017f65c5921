#include "omegalim/tower.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "omegalim/errors.hpp"

namespace omegalim {

namespace {
// Mantissas are renormalized above this bound so products and sums of
// representable values never overflow.
constexpr double kLift = 1e300;
constexpr double kRelTol = 1e-12;
}  // namespace

TowerValue TowerValue::make(int sign, int height, double mantissa) {
  TowerValue t;
  if (sign == 0) return t;
  if (!std::isfinite(mantissa)) throw DomainError("non-finite tower mantissa");
  if (height < 0) throw DomainError("negative tower height");
  if (height > 0 && mantissa < 0)
    throw DomainError("negative mantissa above height zero");
  if (height == 0 && mantissa == 0.0) return t;
  t.sign_ = sign < 0 ? -1 : 1;
  t.height_ = height;
  t.mantissa_ = std::fabs(mantissa);
  // Push oversized mantissas up; pull sub-1 mantissas down.
  while (t.mantissa_ >= kLift) {
    t.mantissa_ = std::log(t.mantissa_);
    ++t.height_;
  }
  while (t.height_ > 0 && t.mantissa_ < 1.0) {
    t.mantissa_ = std::exp(t.mantissa_);
    --t.height_;
  }
  if (t.height_ == 0 && t.mantissa_ == 0.0) t.sign_ = 0;
  return t;
}

TowerValue TowerValue::of(double v) {
  if (v == 0.0) return TowerValue();
  if (!std::isfinite(v)) throw DomainError("non-finite value");
  return make(v < 0 ? -1 : 1, 0, std::fabs(v));
}

double TowerValue::to_double() const {
  if (sign_ == 0) return 0.0;
  double mag;
  if (height_ == 0) {
    mag = mantissa_;
  } else if (height_ == 1 && mantissa_ < 709.0) {
    mag = std::exp(mantissa_);
  } else {
    mag = std::numeric_limits<double>::infinity();
  }
  return sign_ < 0 ? -mag : mag;
}

TowerValue tv_neg(const TowerValue& a) {
  if (a.is_zero()) return a;
  return TowerValue::make(-a.sign(), a.height(), a.mantissa());
}

TowerValue tv_abs(const TowerValue& a) {
  if (a.is_zero()) return a;
  return TowerValue::make(1, a.height(), a.mantissa());
}

namespace {

// Magnitude comparison of nonzero values.
Ordering mag_compare(const TowerValue& a, const TowerValue& b) {
  int ha = a.height(), hb = b.height();
  double ma = a.mantissa(), mb = b.mantissa();
  // Lift the shorter stack; a non-positive mantissa cannot be lifted and
  // marks a value below e while the taller side is at least e.
  while (ha < hb) {
    if (ma <= 0.0) return Ordering::Less;
    ma = std::log(ma);
    ++ha;
  }
  while (hb < ha) {
    if (mb <= 0.0) return Ordering::Greater;
    mb = std::log(mb);
    ++hb;
  }
  double scale = std::max(std::fabs(ma), std::fabs(mb));
  if (std::fabs(ma - mb) <= kRelTol * scale) return Ordering::Equal;
  return ma < mb ? Ordering::Less : Ordering::Greater;
}

// ln of a positive magnitude; signed result.
TowerValue mag_ln(const TowerValue& a) {
  if (a.height() == 0) {
    if (a.mantissa() <= 0.0) throw DomainError("log of a non-positive value");
    return TowerValue::of(std::log(a.mantissa()));
  }
  return TowerValue::make(1, a.height() - 1, a.mantissa());
}

TowerValue mag_exp(const TowerValue& x) {
  if (x.is_zero()) return TowerValue::of(1.0);
  if (x.sign() > 0) {
    if (x.height() == 0 && x.mantissa() < 690.0)
      return TowerValue::of(std::exp(x.mantissa()));
    return TowerValue::make(1, x.height() + 1, x.mantissa());
  }
  // exp(-|x|): either a plain double or an underflow to zero.
  if (x.height() == 0 && x.mantissa() < 690.0)
    return TowerValue::of(std::exp(-x.mantissa()));
  return TowerValue();
}

// |small| / |big| collapsed to a double in [0, 1].
double magnitude_ratio(const TowerValue& small, const TowerValue& big) {
  if (small.height() == 0 && big.height() == 0)
    return small.mantissa() / big.mantissa();
  TowerValue d = tv_sub(mag_ln(small), mag_ln(big));
  double dd = d.to_double();
  if (dd < -700.0) return 0.0;
  if (dd > 0.0) return 1.0;  // equal within tolerance
  return std::exp(dd);
}

// Magnitude times a factor in (0, 2].
TowerValue mag_scale(const TowerValue& m, double f) {
  if (f <= 0.0) return TowerValue();
  if (m.height() == 0) return TowerValue::of(m.mantissa() * f);
  return mag_exp(tv_add(mag_ln(m), TowerValue::of(std::log(f))));
}

TowerValue mag_mul(const TowerValue& a, const TowerValue& b) {
  if (a.height() == 0 && b.height() == 0 &&
      std::log10(a.mantissa()) + std::log10(b.mantissa()) < 290.0)
    return TowerValue::of(a.mantissa() * b.mantissa());
  return mag_exp(tv_add(mag_ln(a), mag_ln(b)));
}

TowerValue mag_div(const TowerValue& a, const TowerValue& b) {
  if (a.height() == 0 && b.height() == 0)
    return TowerValue::of(a.mantissa() / b.mantissa());
  return mag_exp(tv_sub(mag_ln(a), mag_ln(b)));
}

}  // namespace

TowerValue tv_add(const TowerValue& a, const TowerValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.height() == 0 && b.height() == 0)
    return TowerValue::of(a.sign() * a.mantissa() + b.sign() * b.mantissa());
  TowerValue big = a, small = b;
  if (mag_compare(tv_abs(big), tv_abs(small)) == Ordering::Less)
    std::swap(big, small);
  double r = magnitude_ratio(tv_abs(small), tv_abs(big));
  if (big.sign() == small.sign()) {
    TowerValue mag = mag_scale(tv_abs(big), 1.0 + r);
    return big.sign() < 0 ? tv_neg(mag) : mag;
  }
  if (r >= 1.0 - 1e-15) return TowerValue();  // cancellation to working precision
  TowerValue mag = mag_scale(tv_abs(big), 1.0 - r);
  return big.sign() < 0 ? tv_neg(mag) : mag;
}

TowerValue tv_sub(const TowerValue& a, const TowerValue& b) {
  return tv_add(a, tv_neg(b));
}

TowerValue tv_mul(const TowerValue& a, const TowerValue& b) {
  if (a.is_zero() || b.is_zero()) return TowerValue();
  TowerValue mag = mag_mul(tv_abs(a), tv_abs(b));
  return a.sign() * b.sign() < 0 ? tv_neg(mag) : mag;
}

TowerValue tv_div(const TowerValue& a, const TowerValue& b) {
  if (b.is_zero()) throw DomainError("tower division by zero");
  if (a.is_zero()) return TowerValue();
  TowerValue mag = mag_div(tv_abs(a), tv_abs(b));
  return a.sign() * b.sign() < 0 ? tv_neg(mag) : mag;
}

TowerValue tv_pow(const TowerValue& a, double r) {
  if (r == 0.0) return TowerValue::of(1.0);
  if (a.is_zero()) {
    if (r < 0) throw DomainError("zero base with a negative power");
    return TowerValue();
  }
  int sign = 1;
  if (a.sign() < 0) {
    double ri = std::llround(r);
    if (std::fabs(r - ri) > 1e-9)
      throw DomainError("negative base with a fractional power");
    sign = std::llround(r) % 2 == 0 ? 1 : -1;
  }
  TowerValue mag = mag_exp(tv_mul(TowerValue::of(r), mag_ln(tv_abs(a))));
  return sign < 0 ? tv_neg(mag) : mag;
}

TowerValue tv_ln(const TowerValue& a) {
  if (a.sign() <= 0) throw DomainError("log of a non-positive value");
  return mag_ln(a);
}

TowerValue tv_exp(const TowerValue& a) { return mag_exp(a); }

Ordering tv_compare(const TowerValue& a, const TowerValue& b) {
  if (a.sign() != b.sign())
    return a.sign() < b.sign() ? Ordering::Less : Ordering::Greater;
  if (a.sign() == 0) return Ordering::Equal;
  Ordering mag = mag_compare(tv_abs(a), tv_abs(b));
  return a.sign() > 0 ? mag : reversed(mag);
}

namespace {

// ln of the base's value at n. For log atoms this is the iterated-log chain
// one deeper; any non-positive intermediate is a domain failure at this n.
TowerValue ln_base_at(const BaseAtom& base, std::uint64_t n) {
  switch (base.kind()) {
    case BaseAtom::Kind::Log: {
      double x = static_cast<double>(n);
      for (int i = 0; i <= base.log_depth(); ++i) {
        if (x <= 0.0)
          throw DomainError("inner logarithm non-positive at this index");
        x = std::log(x);
      }
      return TowerValue::of(x);
    }
    case BaseAtom::Kind::Exp:
      return eval_in_number(base.exp_arg(), n);
    case BaseAtom::Kind::Tower:
      throw TowerAtomNotEvaluable("tower atoms have no finite evaluation");
  }
  throw DomainError("unhandled base");
}

}  // namespace

TowerValue eval_proto(const Prototype& p, std::uint64_t n) {
  if (n < 3) throw DomainError("evaluation index must be at least 3");
  TowerValue log_sum;  // sum of exponent * ln(base(n))
  for (const auto& f : p.factors()) {
    TowerValue lb = ln_base_at(f.base, n);
    log_sum = tv_add(log_sum, tv_mul(TowerValue::of(f.exponent.to_double()), lb));
  }
  return tv_exp(log_sum);
}

TowerValue eval_limit(const Limit& l, std::uint64_t n) {
  TowerValue acc;
  for (const auto& t : l.terms())
    acc = tv_add(acc, tv_mul(TowerValue::of(t.coeff().to_double()),
                             eval_proto(t.proto(), n)));
  return acc;
}

TowerValue eval_in_number(const InNumber& x, std::uint64_t n) {
  if (x.is_zero()) return TowerValue();
  return tv_div(eval_limit(x.num(), n), eval_limit(x.den(), n));
}

TowerValue eval_seq(const SeqExprPtr& e, std::uint64_t n) {
  switch (e->op()) {
    case SeqExpr::Op::Const:
      return TowerValue::of(e->value().to_double());
    case SeqExpr::Op::Index:
      return TowerValue::of(static_cast<double>(n));
    case SeqExpr::Op::Add:
      return tv_add(eval_seq(e->left(), n), eval_seq(e->right(), n));
    case SeqExpr::Op::Sub:
      return tv_sub(eval_seq(e->left(), n), eval_seq(e->right(), n));
    case SeqExpr::Op::Mul:
      return tv_mul(eval_seq(e->left(), n), eval_seq(e->right(), n));
    case SeqExpr::Op::Div:
      return tv_div(eval_seq(e->left(), n), eval_seq(e->right(), n));
    case SeqExpr::Op::PowConst:
      return tv_pow(eval_seq(e->left(), n), e->value().to_double());
    case SeqExpr::Op::Exp:
      return tv_exp(eval_seq(e->left(), n));
    case SeqExpr::Op::Ln:
      return tv_ln(eval_seq(e->left(), n));
    case SeqExpr::Op::Sin:
    case SeqExpr::Op::Cos: {
      TowerValue v = eval_seq(e->left(), n);
      if (v.height() != 0)
        throw DomainError("sin/cos of a value beyond the double range");
      double x = v.sign() * v.mantissa();
      return TowerValue::of(e->op() == SeqExpr::Op::Sin ? std::sin(x)
                                                        : std::cos(x));
    }
    case SeqExpr::Op::TowerExp:
    case SeqExpr::Op::TowerLog:
      throw TowerAtomNotEvaluable("tower atoms have no finite evaluation");
  }
  throw DomainError("unhandled expression node");
}

std::vector<std::uint64_t> default_schedule() {
  std::vector<std::uint64_t> s;
  std::uint64_t n = 100;
  for (int i = 0; i < 8; ++i, n *= 10) s.push_back(n);
  return s;
}

namespace {

// Sign of sum(c_i * P_i(n)). Evaluates every class, lets the numerically
// dominant one decide, and resolves near-ties through the exactly cancelled
// log-difference of the tied classes (their absolute values may collide in
// double precision while their ratio is still wildly away from 1). Returns
// 0 when the sign stays ambiguous at this n.
int sign_of_limit_at(const Limit& l, std::uint64_t n) {
  if (l.is_zero()) return 0;
  const auto& terms = l.terms();
  if (terms.size() == 1) return terms[0].coeff().sign();
  std::vector<TowerValue> vals;
  vals.reserve(terms.size());
  for (const auto& t : terms) vals.push_back(eval_proto(t.proto(), n));
  std::size_t top = 0;
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (mag_compare(tv_abs(vals[i]), tv_abs(vals[top])) == Ordering::Greater)
      top = i;
  std::size_t second = top == 0 ? 1 : 0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i == top || i == second) continue;
    if (mag_compare(tv_abs(vals[i]), tv_abs(vals[second])) == Ordering::Greater)
      second = i;
  }
  // Wide dominance lets the top coefficient decide outright.
  double margin = 1e6 * static_cast<double>(terms.size());
  TowerValue bound = tv_mul(tv_abs(vals[second]), TowerValue::of(margin));
  if (mag_compare(tv_abs(vals[top]), bound) == Ordering::Greater)
    return terms[top].coeff().sign();
  // All values inside the plain double range: sum directly.
  bool all_flat = true;
  for (const auto& v : vals) all_flat = all_flat && v.height() == 0;
  if (all_flat) {
    double total = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      double c = terms[i].coeff().to_double() * vals[i].sign() *
                 vals[i].mantissa();
      total += c;
      scale += std::fabs(c);
    }
    if (scale > 0.0 && std::fabs(total) > 1e-9 * scale)
      return total < 0 ? -1 : 1;
  }
  // Collapse every term onto a reference class via exact log-differences.
  // When a ratio blows past the reference it becomes the new reference;
  // each restart strictly enlarges the reference value, so this ends.
  std::size_t ref = top;
  for (std::size_t attempt = 0; attempt <= terms.size(); ++attempt) {
    bool restart = false;
    double total = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      TowerValue ratio = TowerValue::of(1.0);
      if (i != ref) {
        InNumber ld = in_sub(log_of(terms[i].proto()), log_of(terms[ref].proto()));
        if (!ld.is_zero()) ratio = tv_exp(eval_in_number(ld, n));
      }
      if (mag_compare(tv_abs(ratio), TowerValue::of(1e9)) == Ordering::Greater) {
        ref = i;
        restart = true;
        break;
      }
      double c = terms[i].coeff().to_double() * ratio.to_double();
      total += c;
      scale += std::fabs(c);
    }
    if (restart) continue;
    if (scale == 0.0) return 0;
    if (std::fabs(total) <= 1e-9 * scale) return 0;
    return total < 0 ? -1 : 1;
  }
  return 0;
}

int sign_of_in_number_at(const InNumber& x, std::uint64_t n) {
  if (x.is_zero()) return 0;
  return sign_of_limit_at(x.num(), n) * sign_of_limit_at(x.den(), n);
}

}  // namespace

NumericComparison numeric_compare(const Prototype& p, const Prototype& q,
                                  const std::vector<std::uint64_t>& schedule) {
  if (schedule.empty()) throw UndefinedError("empty evaluation schedule");
  if (p.has_tower() || q.has_tower())
    throw TowerAtomNotEvaluable("tower atoms have no finite evaluation");
  InNumber d = in_sub(log_of(p), log_of(q));
  NumericComparison result;
  result.verdict = Ordering::Equal;
  for (std::uint64_t n : schedule) {
    NumericComparison::Sample s{n, Ordering::Equal, true};
    try {
      int sign = sign_of_in_number_at(d, n);
      s.ordering = ordering_from_sign(sign);
      // A zero log-difference is a genuine tie; otherwise sign 0 means
      // this n could not separate the classes.
      s.resolved = d.is_zero() || sign != 0;
    } catch (const DomainError&) {
      s.resolved = false;
    }
    result.samples.push_back(s);
  }
  result.stable = true;
  for (std::size_t i = result.samples.size() / 2; i < result.samples.size();
       ++i) {
    const auto& s = result.samples[i];
    if (!s.resolved || s.ordering != result.samples.back().ordering)
      result.stable = false;
  }
  for (auto it = result.samples.rbegin(); it != result.samples.rend(); ++it) {
    if (it->resolved) {
      result.verdict = it->ordering;
      break;
    }
  }
  return result;
}

}  // namespace omegalim
