#include "omegalim/engine.hpp"

#include <limits>

#include "omegalim/errors.hpp"

namespace omegalim {

namespace {

// Internal signal: a series was not expanded far enough to certify the
// requested depth; the driver retries with more guard terms.
struct PrecisionExhausted {};

// Evaluation result carrying class bounds for the two kinds of residue:
// `osc` bounds a bounded-oscillation residue (never shrinks with more
// work), `err` bounds the series truncation error (shrinks with higher
// order).
struct Value {
  InNumber v;
  std::optional<Prototype> osc;
  std::optional<Prototype> err;
};

std::optional<Prototype> noise_max(const std::optional<Prototype>& a,
                                   const std::optional<Prototype>& b) {
  if (!a) return b;
  if (!b) return a;
  return compare(*a, *b) == Ordering::Less ? b : a;
}

std::optional<Prototype> noise_mul(const std::optional<Prototype>& n,
                                   const Prototype& cls) {
  if (!n) return std::nullopt;
  return mul(*n, cls);
}

// Class bound on |x|: the leading value class joined with both noise
// bounds. nullopt means x is exactly zero.
std::optional<Prototype> bound_class(const Value& x) {
  std::optional<Prototype> b;
  if (!x.v.is_zero()) b = leading_term(x.v)->proto();
  return noise_max(noise_max(b, x.osc), x.err);
}

bool at_or_above(const Prototype& cls, const Prototype& floor_cls) {
  return compare(cls, floor_cls) != Ordering::Less;
}

struct Evaluator {
  int order;  // series expansion order (requested depth + guard)
  EngineOptions opts;

  Value eval(const SeqExprPtr& e) const {
    switch (e->op()) {
      case SeqExpr::Op::Const:
        return {InNumber::from_scalar(e->value()), {}, {}};
      case SeqExpr::Op::Index:
        return {InNumber::from_proto(Prototype::omega()), {}, {}};
      case SeqExpr::Op::TowerExp:
        return {InNumber::from_proto(Prototype::exp_tower()), {}, {}};
      case SeqExpr::Op::TowerLog:
        return {InNumber::from_proto(Prototype::log_tower()), {}, {}};
      case SeqExpr::Op::Add:
        return add(eval(e->left()), eval(e->right()));
      case SeqExpr::Op::Sub:
        return add(eval(e->left()), negate(eval(e->right())));
      case SeqExpr::Op::Mul:
        return mul_values(eval(e->left()), eval(e->right()));
      case SeqExpr::Op::Div:
        return mul_values(eval(e->left()), invert(eval(e->right())));
      case SeqExpr::Op::PowConst:
        return pow_value(eval(e->left()), e->value());
      case SeqExpr::Op::Exp:
        return exp_value(eval(e->left()));
      case SeqExpr::Op::Ln:
        return ln_value(eval(e->left()));
      case SeqExpr::Op::Sin:
        return trig_value(eval(e->left()), /*sine=*/true);
      case SeqExpr::Op::Cos:
        return trig_value(eval(e->left()), /*sine=*/false);
    }
    throw Error("unhandled expression node");
  }

  static Value add(const Value& a, const Value& b) {
    return {in_add(a.v, b.v), noise_max(a.osc, b.osc), noise_max(a.err, b.err)};
  }

  static Value negate(const Value& a) { return {in_neg(a.v), a.osc, a.err}; }

  static Value mul_values(const Value& a, const Value& b) {
    Value r{in_mul(a.v, b.v), {}, {}};
    auto ba = bound_class(a);
    auto bb = bound_class(b);
    if (ba && bb) {
      r.osc = noise_max(noise_mul(a.osc, *bb), noise_mul(b.osc, *ba));
      r.err = noise_max(noise_mul(a.err, *bb), noise_mul(b.err, *ba));
    }
    return r;
  }

  static Value invert(const Value& b) {
    if (b.v.is_zero()) {
      if (b.osc) throw OscillatoryError("division by an unresolved residue");
      throw DivisionByZero("division by a zero limit");
    }
    Prototype lead = leading_term(b.v)->proto();
    if (b.osc && at_or_above(*b.osc, lead))
      throw OscillatoryError("divisor is dominated by an oscillating residue");
    if (b.err && at_or_above(*b.err, lead)) throw PrecisionExhausted{};
    Prototype inv_sq = pow(lead, Scalar(-2));
    return {in_inv(b.v), noise_mul(b.osc, inv_sq), noise_mul(b.err, inv_sq)};
  }

  Value pow_value(const Value& base, const Scalar& exponent) const {
    if (exponent.is_integer() &&
        exponent.num() <= std::numeric_limits<long long>::max() &&
        exponent.num() >= std::numeric_limits<long long>::min()) {
      long long k = exponent.num().convert_to<long long>();
      if (k == 0) return {InNumber::one(), {}, {}};
      Value acc{InNumber::one(), {}, {}};
      Value b = k < 0 ? invert(base) : base;
      unsigned long long n =
          k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
                : static_cast<unsigned long long>(k);
      while (n > 0) {
        if (n & 1ull) acc = mul_values(acc, b);
        b = mul_values(b, b);
        n >>= 1;
      }
      return acc;
    }
    Value lnb = ln_value(base);
    return exp_value({in_scale(lnb.v, exponent), lnb.osc, lnb.err});
  }

  Value ln_value(const Value& a) const {
    if (a.v.is_zero()) {
      if (a.osc) throw OscillatoryError("ln of an unresolved residue");
      throw UndefinedError("ln of a zero limit");
    }
    Term lead = *leading_term(a.v);
    if (a.osc && at_or_above(*a.osc, lead.proto()))
      throw OscillatoryError("ln argument is dominated by an oscillating residue");
    if (a.err && at_or_above(*a.err, lead.proto())) throw PrecisionExhausted{};
    if (lead.coeff().sign() <= 0)
      throw UndefinedError("ln of a limit with non-positive leading coefficient");
    // a = c*p*(1 + u) with u infinitesimal.
    InNumber u = in_sub(
        in_mul(a.v, in_inv(InNumber::from_term(lead))), InNumber::one());
    InNumber series = InNumber::zero();
    InNumber upow = InNumber::one();
    for (int k = 1; k <= order; ++k) {
      upow = in_mul(upow, u);
      Scalar c = Scalar(k % 2 == 1 ? 1 : -1) / Scalar(k);
      series = in_add(series, in_scale(upow, c));
    }
    InNumber value = in_add(
        in_add(log_of(lead.proto()),
               InNumber::from_scalar(scalar_ln(lead.coeff(), opts.round_constants))),
        series);
    std::optional<Prototype> trunc_err;
    if (!u.is_zero())
      trunc_err = pow(leading_term(u)->proto(), Scalar(order + 1));
    Prototype inv_lead = pow(lead.proto(), Scalar(-1));
    return {value, noise_mul(a.osc, inv_lead),
            noise_max(noise_mul(a.err, inv_lead), trunc_err)};
  }

  Value exp_value(const Value& a) const {
    if (a.osc) {
      Ordering o = compare(*a.osc, Prototype::unit());
      if (o == Ordering::Greater)
        throw OscillatoryError("oscillating residue at an infinite class in the exponent");
    }
    if (a.err && compare(*a.err, Prototype::unit()) == Ordering::Greater)
      throw PrecisionExhausted{};
    MagnitudeParts parts = split_by_magnitude(a.v);
    Prototype cls = parts.infinite.is_zero() ? Prototype::unit()
                                             : exp_of_any(parts.infinite);
    Scalar scale = scalar_exp(parts.finite, opts.round_constants);
    InNumber series = InNumber::one();
    InNumber epow = InNumber::one();
    Scalar fact(1);
    for (int k = 1; k <= order; ++k) {
      epow = in_mul(epow, parts.small);
      fact *= Scalar(k);
      series = in_add(series, in_scale(epow, fact.inverse()));
    }
    InNumber value = in_mul(InNumber::from_term(Term(scale, cls)), series);
    std::optional<Prototype> trunc_err;
    if (!parts.small.is_zero())
      trunc_err =
          mul(pow(leading_term(parts.small)->proto(), Scalar(order + 1)), cls);
    Value r{value, {}, noise_max(noise_mul(a.err, cls), trunc_err)};
    if (a.osc) {
      // Residue of class 1 in the exponent leaves a bounded multiplicative
      // factor: even the leading coefficient is unresolved. Smaller residues
      // scale into the result.
      Ordering o = compare(*a.osc, Prototype::unit());
      r.osc = o == Ordering::Equal ? cls : mul(*a.osc, cls);
    }
    return r;
  }

  Value trig_value(const Value& a, bool sine) const {
    if (a.osc && compare(*a.osc, Prototype::unit()) != Ordering::Less)
      return {InNumber::zero(), Prototype::unit(), a.err};
    if (a.err && compare(*a.err, Prototype::unit()) != Ordering::Less)
      throw PrecisionExhausted{};
    MagnitudeParts parts = split_by_magnitude(a.v);
    if (!parts.infinite.is_zero()) {
      // Bounded oscillation of class 1; deeper structure is not resolvable.
      return {InNumber::zero(), Prototype::unit(), {}};
    }
    Scalar sk = scalar_sin(parts.finite, opts.round_constants);
    Scalar ck = scalar_cos(parts.finite, opts.round_constants);
    // sin(k + u) = sin k cos u + cos k sin u, and likewise for cos.
    InNumber sin_u = InNumber::zero();
    InNumber cos_u = InNumber::one();
    InNumber epow = InNumber::one();
    Scalar fact(1);
    for (int k = 1; k <= order + 1; ++k) {
      epow = in_mul(epow, parts.small);
      fact *= Scalar(k);
      Scalar c = fact.inverse();
      if (k % 2 == 1) {
        sin_u = in_add(sin_u, in_scale(epow, (k % 4 == 1) ? c : -c));
      } else {
        cos_u = in_add(cos_u, in_scale(epow, (k % 4 == 0) ? c : -c));
      }
    }
    InNumber value =
        sine ? in_add(in_scale(cos_u, sk), in_scale(sin_u, ck))
             : in_sub(in_scale(cos_u, ck), in_scale(sin_u, sk));
    std::optional<Prototype> trunc_err;
    if (!parts.small.is_zero())
      trunc_err = pow(leading_term(parts.small)->proto(), Scalar(order + 1));
    return {value, a.osc, noise_max(a.err, trunc_err)};
  }
};

// Emission check: how many leading expansion terms of `val` are certified
// exact. Throws OscillatoryError when an oscillation bound blocks the next
// term; PrecisionExhausted when only the series error does.
int certified_terms(const Value& val, int want) {
  int count = 0;
  Limit r = val.v.num();
  const Limit& den = val.v.den();
  while (count < want && !r.is_zero()) {
    Term t(r.leading().coeff(),
           div(r.leading().proto(), den.leading().proto()));
    if (val.osc && compare(t.proto(), *val.osc) != Ordering::Greater)
      throw OscillatoryError("expansion blocked by an oscillating residue");
    if (val.err && compare(t.proto(), *val.err) != Ordering::Greater)
      throw PrecisionExhausted{};
    r = lim_sub(r, mul_term(den, t));
    ++count;
  }
  if (count < want) {
    if (val.osc)
      throw OscillatoryError("expansion blocked by an oscillating residue");
    if (val.err) throw PrecisionExhausted{};
  }
  return count;
}

Value evaluate_certified(const SeqExprPtr& e, int depth,
                         const EngineOptions& opts) {
  if (depth < 1) throw UndefinedError("depth must be positive");
  for (int guard : {2, 6, 14, 30}) {
    try {
      Evaluator ev{depth + guard, opts};
      Value val = ev.eval(e);
      certified_terms(val, depth);
      return val;
    } catch (const PrecisionExhausted&) {
      continue;
    }
  }
  throw UndefinedError("requested depth unattainable with bounded guard terms");
}

}  // namespace

InNumber limit_of(const SeqExprPtr& e, int depth, const EngineOptions& opts) {
  return evaluate_certified(e, depth, opts).v;
}

std::optional<Term> leading_term_limit(const SeqExprPtr& e,
                                       const EngineOptions& opts) {
  Value val = evaluate_certified(e, 1, opts);
  if (val.v.is_zero()) return std::nullopt;
  return leading_term(val.v);
}

bool is_smooth(const SeqExprPtr& e, int depth, std::string* reason,
               const EngineOptions& opts) {
  try {
    limit_of(e, depth, opts);
    return true;
  } catch (const Error& err) {
    if (reason) *reason = err.what();
    return false;
  }
}

std::optional<Scalar> cauchy_check(const SeqExprPtr& e,
                                   const EngineOptions& opts) {
  auto lead = leading_term_limit(e, opts);
  if (!lead) return std::nullopt;
  if (!lead->proto().is_unit_form()) return std::nullopt;
  return lead->coeff();
}

}  // namespace omegalim
