#include "omegalim/prototype.hpp"

#include <algorithm>
#include <map>

#include "omegalim/errors.hpp"
#include "omegalim/in_number.hpp"

namespace omegalim {

BaseAtom BaseAtom::log_base(int depth) {
  if (depth < 0) throw Error("log depth must be nonnegative");
  BaseAtom a;
  a.kind_ = Kind::Log;
  a.depth_ = depth;
  return a;
}

BaseAtom BaseAtom::exp_base(InNumber arg) {
  BaseAtom a;
  a.kind_ = Kind::Exp;
  a.arg_ = std::make_shared<const InNumber>(std::move(arg));
  return a;
}

BaseAtom BaseAtom::tower(TowerDir dir) {
  BaseAtom a;
  a.kind_ = Kind::Tower;
  a.dir_ = dir;
  return a;
}

bool atom_equal(const BaseAtom& a, const BaseAtom& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case BaseAtom::Kind::Log: return a.log_depth() == b.log_depth();
    case BaseAtom::Kind::Tower: return a.tower_dir() == b.tower_dir();
    case BaseAtom::Kind::Exp:
      // Ratio representations of the same argument are not unique; equality
      // is by value (cross-multiplication), matching base_compare.
      return in_structural_equal(a.exp_arg(), b.exp_arg()) ||
             in_equal(a.exp_arg(), b.exp_arg());
  }
  return false;
}

Ordering base_compare(const BaseAtom& a, const BaseAtom& b) {
  const bool a_exp_tower =
      a.kind() == BaseAtom::Kind::Tower && a.tower_dir() == TowerDir::Exp;
  const bool b_exp_tower =
      b.kind() == BaseAtom::Kind::Tower && b.tower_dir() == TowerDir::Exp;
  if (a_exp_tower || b_exp_tower) {
    if (a_exp_tower && b_exp_tower) return Ordering::Equal;
    return a_exp_tower ? Ordering::Greater : Ordering::Less;
  }
  const bool a_log_tower = a.kind() == BaseAtom::Kind::Tower;
  const bool b_log_tower = b.kind() == BaseAtom::Kind::Tower;
  if (a_log_tower || b_log_tower) {
    if (a_log_tower && b_log_tower) return Ordering::Equal;
    // ln^w(w) sits below every finite-height infinite base.
    return a_log_tower ? Ordering::Less : Ordering::Greater;
  }
  if (a.kind() == BaseAtom::Kind::Log && b.kind() == BaseAtom::Kind::Log) {
    // Fewer applications of ln grow faster.
    if (a.log_depth() == b.log_depth()) return Ordering::Equal;
    return a.log_depth() < b.log_depth() ? Ordering::Greater : Ordering::Less;
  }
  if (a.kind() == BaseAtom::Kind::Exp && b.kind() == BaseAtom::Kind::Exp) {
    if (in_structural_equal(a.exp_arg(), b.exp_arg())) return Ordering::Equal;
    return in_compare(a.exp_arg(), b.exp_arg());
  }
  // Mixed Log vs Exp: compare through one logarithm.
  if (a.kind() == BaseAtom::Kind::Log) {
    InNumber log_a = InNumber::from_proto(Prototype::log_atom(a.log_depth() + 1));
    return in_compare(log_a, b.exp_arg());
  }
  InNumber log_b = InNumber::from_proto(Prototype::log_atom(b.log_depth() + 1));
  return in_compare(a.exp_arg(), log_b);
}

Prototype Prototype::log_atom(int depth) {
  std::vector<Factor> f{{BaseAtom::log_base(depth), Scalar(1)}};
  return Prototype(std::move(f));
}

Prototype Prototype::exp_tower() {
  std::vector<Factor> f{{BaseAtom::tower(TowerDir::Exp), Scalar(1)}};
  return Prototype(std::move(f));
}

Prototype Prototype::log_tower() {
  std::vector<Factor> f{{BaseAtom::tower(TowerDir::Log), Scalar(1)}};
  return Prototype(std::move(f));
}

bool Prototype::has_tower() const {
  for (const auto& f : factors_)
    if (f.base.kind() == BaseAtom::Kind::Tower) return true;
  return false;
}

Scalar Prototype::tower_exponent(TowerDir dir) const {
  for (const auto& f : factors_)
    if (f.base.kind() == BaseAtom::Kind::Tower && f.base.tower_dir() == dir)
      return f.exponent;
  return Scalar(0);
}

Prototype Prototype::without_towers() const {
  std::vector<Factor> out;
  for (const auto& f : factors_)
    if (f.base.kind() != BaseAtom::Kind::Tower) out.push_back(f);
  return Prototype(std::move(out));
}

bool Prototype::pure_log_form() const {
  for (const auto& f : factors_)
    if (f.base.kind() != BaseAtom::Kind::Log) return false;
  return true;
}

bool proto_equal(const Prototype& a, const Prototype& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  if (fa.size() != fb.size()) return false;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (fa[i].exponent != fb[i].exponent) return false;
    if (!atom_equal(fa[i].base, fb[i].base)) return false;
  }
  return true;
}

namespace {

bool is_reducible_class(const Prototype& p) {
  // c * ln^k(w) with k >= 1 and exponent exactly 1 folds back to a power of
  // ln^(k-1)(w) under exp.
  const auto& f = p.factors();
  return f.size() == 1 && f[0].base.kind() == BaseAtom::Kind::Log &&
         f[0].base.log_depth() >= 1 && f[0].exponent.is_one();
}

bool contains_tower_term(const Prototype& p) { return p.has_tower(); }

// Lexicographic comparison of two pure-log monomials, walking the factor
// lists from the dominant (shallowest) base. The first differing exponent
// decides; this is the recursion's base case.
Ordering compare_pure_log(const Prototype& a, const Prototype& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  constexpr int kPastEnd = 1 << 30;
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    int da = i < fa.size() ? fa[i].base.log_depth() : kPastEnd;
    int db = j < fb.size() ? fb[j].base.log_depth() : kPastEnd;
    int depth = std::min(da, db);
    Scalar ea = da == depth ? fa[i++].exponent : Scalar(0);
    Scalar eb = db == depth ? fb[j++].exponent : Scalar(0);
    if (ea != eb) return ea > eb ? Ordering::Greater : Ordering::Less;
  }
  return Ordering::Equal;
}

Ordering compare_finite_height(const Prototype& a, const Prototype& b) {
  if (proto_equal(a, b)) return Ordering::Equal;
  if (a.pure_log_form() && b.pure_log_form()) return compare_pure_log(a, b);
  InNumber d = in_sub(log_of(a), log_of(b));
  if (d.is_zero()) return Ordering::Equal;
  return ordering_from_sign(leading_term(d)->coeff().sign());
}

}  // namespace

Ordering compare(const Prototype& p, const Prototype& q) {
  if (proto_equal(p, q)) return Ordering::Equal;
  // Single factor against the unit class: every base is an infinite class,
  // so the exponent sign decides.
  if (q.is_unit_form() && p.factors().size() == 1)
    return ordering_from_sign(p.factors()[0].exponent.sign());
  if (p.is_unit_form() && q.factors().size() == 1)
    return ordering_from_sign(-q.factors()[0].exponent.sign());
  // A tower-exp factor outweighs everything of finite height; a tower-log
  // factor is outweighed by everything of finite height, so it only breaks
  // ties.
  Scalar et = p.tower_exponent(TowerDir::Exp) - q.tower_exponent(TowerDir::Exp);
  if (!et.is_zero()) return ordering_from_sign(et.sign());
  Ordering fin = compare_finite_height(p.without_towers(), q.without_towers());
  if (fin != Ordering::Equal) return fin;
  Scalar lt = p.tower_exponent(TowerDir::Log) - q.tower_exponent(TowerDir::Log);
  return ordering_from_sign(lt.sign());
}

namespace {

// Extracts a canonical factor list from a purely infinite (or zero)
// exponent value: reducible log terms become log-power factors, the
// irreducible remainder becomes a single Exp base with its leading
// coefficient folded into the factor exponent.
std::vector<Factor> exp_refactor(const InNumber& m) {
  std::vector<Factor> out;
  if (m.is_zero()) return out;
  std::map<int, Scalar> log_exps;
  std::vector<Term> pending;
  InNumber pending_tail = InNumber::zero();
  InNumber r = m;
  const int budget = 256;
  int step = 0;
  for (; step < budget && !r.is_zero(); ++step) {
    Term t = *leading_term(r);
    if (contains_tower_term(t.proto()))
      throw TowerArithmeticError("exp of a tower-atom term is not defined");
    if (!is_infinite(t.proto()))
      throw NotPurelyInfinite("exponent value has a non-infinite term");
    if (is_reducible_class(t.proto())) {
      int depth = t.proto().factors()[0].base.log_depth();
      auto it = log_exps.find(depth - 1);
      if (it == log_exps.end()) log_exps.emplace(depth - 1, t.coeff());
      else it->second += t.coeff();
      r = in_sub(r, InNumber::from_term(t));
      continue;
    }
    if (r.den().is_one()) {
      // Plain limit: partition the remaining terms directly.
      for (const auto& s : r.num().terms()) {
        if (contains_tower_term(s.proto()))
          throw TowerArithmeticError("exp of a tower-atom term is not defined");
        if (!is_infinite(s.proto()))
          throw NotPurelyInfinite("exponent value has a non-infinite term");
        if (is_reducible_class(s.proto())) {
          int depth = s.proto().factors()[0].base.log_depth();
          auto it = log_exps.find(depth - 1);
          if (it == log_exps.end()) log_exps.emplace(depth - 1, s.coeff());
          else it->second += s.coeff();
        } else {
          pending.push_back(s);
        }
      }
      r = InNumber::zero();
      break;
    }
    if (expansion_all_infinite(r.num(), r.den())) {
      // A reducible class may still be hit further down the expansion; scan
      // the dominant ratio direction before accepting the remainder whole.
      const Prototype& qlead = r.den().leading().proto();
      Prototype tau = div(r.den().terms().back().proto(), qlead);
      bool hit = false;
      for (const auto& s : r.num().terms()) {
        Prototype g = div(s.proto(), qlead);
        for (int k = 0; k <= 32 && !hit; ++k) {
          if (is_reducible_class(g)) hit = true;
          g = mul(g, tau);
        }
        if (hit) break;
      }
      if (!hit) {
        pending_tail = r;
        r = InNumber::zero();
        break;
      }
    }
    pending.push_back(t);
    r = in_sub(r, InNumber::from_term(t));
  }
  if (!r.is_zero())
    throw UndefinedError(
        "exponent canonicalization did not resolve within the step budget");
  InNumber residual =
      in_add(InNumber::from_limit(Limit::from_terms(std::move(pending))),
             pending_tail);
  if (!residual.is_zero()) {
    Scalar c1 = leading_term(residual)->coeff();
    InNumber arg = in_scale(residual, c1.inverse());
    out.push_back({BaseAtom::exp_base(std::move(arg)), c1});
  }
  for (auto& [depth, e] : log_exps)
    if (!e.is_zero()) out.push_back({BaseAtom::log_base(depth), e});
  return out;
}

}  // namespace

Prototype canonicalize_factors(std::vector<Factor> factors) {
  std::map<int, Scalar> log_exps;
  std::map<int, Scalar> tower_exps;  // keyed by TowerDir cast
  std::vector<std::pair<InNumber, Scalar>> exp_parts;
  for (auto& f : factors) {
    if (f.exponent.is_zero()) continue;
    switch (f.base.kind()) {
      case BaseAtom::Kind::Log: {
        auto it = log_exps.find(f.base.log_depth());
        if (it == log_exps.end()) log_exps.emplace(f.base.log_depth(), f.exponent);
        else it->second += f.exponent;
        break;
      }
      case BaseAtom::Kind::Tower: {
        int key = static_cast<int>(f.base.tower_dir());
        auto it = tower_exps.find(key);
        if (it == tower_exps.end()) tower_exps.emplace(key, f.exponent);
        else it->second += f.exponent;
        break;
      }
      case BaseAtom::Kind::Exp: {
        bool merged = false;
        for (auto& [arg, e] : exp_parts) {
          if (in_structural_equal(arg, f.base.exp_arg())) {
            e += f.exponent;
            merged = true;
            break;
          }
        }
        if (!merged) exp_parts.emplace_back(f.base.exp_arg(), f.exponent);
        break;
      }
    }
  }
  int live_towers = 0;
  for (auto& [dir, e] : tower_exps)
    if (!e.is_zero()) ++live_towers;
  if (live_towers > 1)
    throw TowerArithmeticError(
        "product of exp-tower and log-tower atoms is not defined");

  std::vector<Factor> out;
  // Merge all exponential content through the exponent arithmetic; a single
  // already-canonical Exp factor passes through untouched. Sums of canonical
  // arguments stay purely infinite with irreducible expansion terms (the
  // classes of a sum are drawn from the operands' classes), so the combined
  // argument needs no refactoring pass, only lead normalization.
  exp_parts.erase(std::remove_if(exp_parts.begin(), exp_parts.end(),
                                 [](const auto& p) { return p.second.is_zero(); }),
                  exp_parts.end());
  if (exp_parts.size() == 1) {
    out.push_back({BaseAtom::exp_base(exp_parts[0].first), exp_parts[0].second});
  } else if (exp_parts.size() > 1) {
    InNumber m = InNumber::zero();
    for (auto& [arg, e] : exp_parts) m = in_add(m, in_scale(arg, e));
    if (!m.is_zero()) {
      Scalar c1 = leading_term(m)->coeff();
      out.push_back({BaseAtom::exp_base(in_scale(m, c1.inverse())), c1});
    }
  }
  for (auto& [depth, e] : log_exps)
    if (!e.is_zero()) out.push_back({BaseAtom::log_base(depth), e});
  for (auto& [dir, e] : tower_exps)
    if (!e.is_zero())
      out.push_back({BaseAtom::tower(static_cast<TowerDir>(dir)), e});

  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    return base_compare(a.base, b.base) == Ordering::Greater;
  });
  // Defensive sweep: merge semantically equal adjacent bases (possible only
  // for non-canonical Exp arguments).
  std::vector<Factor> final_factors;
  for (auto& f : out) {
    if (!final_factors.empty() &&
        base_compare(final_factors.back().base, f.base) == Ordering::Equal) {
      final_factors.back().exponent += f.exponent;
      if (final_factors.back().exponent.is_zero()) final_factors.pop_back();
    } else {
      final_factors.push_back(std::move(f));
    }
  }
  return Prototype(std::move(final_factors));
}

Prototype Prototype::from_factors(std::vector<Factor> factors) {
  return canonicalize_factors(std::move(factors));
}

Prototype mul(const Prototype& p, const Prototype& q) {
  if (p.is_unit_form()) return q;
  if (q.is_unit_form()) return p;
  std::vector<Factor> f = p.factors();
  f.insert(f.end(), q.factors().begin(), q.factors().end());
  return Prototype::from_factors(std::move(f));
}

Prototype div(const Prototype& p, const Prototype& q) {
  if (q.is_unit_form()) return p;
  std::vector<Factor> f = p.factors();
  for (const auto& g : q.factors()) f.push_back({g.base, -g.exponent});
  return Prototype::from_factors(std::move(f));
}

Prototype pow(const Prototype& p, const Scalar& a) {
  if (a.is_zero())
    throw UndefinedError("prototype power with zero exponent");
  std::vector<Factor> f = p.factors();
  for (auto& g : f) g.exponent *= a;
  return Prototype::from_factors(std::move(f));
}

InNumber log_of(const Prototype& p) {
  // Contributions with a trivial denominator gather into one plain limit;
  // only ratio-shaped exponential arguments need field addition.
  std::vector<Term> plain;
  InNumber ratios = InNumber::zero();
  for (const auto& f : p.factors()) {
    switch (f.base.kind()) {
      case BaseAtom::Kind::Log:
        plain.emplace_back(f.exponent,
                           Prototype::log_atom(f.base.log_depth() + 1));
        break;
      case BaseAtom::Kind::Exp: {
        const InNumber& arg = f.base.exp_arg();
        if (arg.den().is_one()) {
          for (const auto& t : arg.num().terms())
            plain.emplace_back(t.coeff() * f.exponent, t.proto());
        } else {
          ratios = in_add(ratios, in_scale(arg, f.exponent));
        }
        break;
      }
      case BaseAtom::Kind::Tower: {
        // Stripping one level from a transfinite tower leaves the tower:
        // ln is a fixed point on these atoms.
        Prototype t = f.base.tower_dir() == TowerDir::Exp
                          ? Prototype::exp_tower()
                          : Prototype::log_tower();
        plain.emplace_back(f.exponent, std::move(t));
        break;
      }
    }
  }
  InNumber flat = InNumber::from_limit(Limit::from_terms(std::move(plain)));
  if (ratios.is_zero()) return flat;
  return in_add(flat, ratios);
}

Prototype exp_of_any(const InNumber& arg) {
  return Prototype::from_factors(exp_refactor(arg));
}

Prototype exp_of(const InNumber& arg) {
  if (arg.is_zero()) return Prototype::unit();
  auto lead = leading_term(arg);
  if (!is_infinite(lead->proto()))
    throw NotPurelyInfinite("exp_of requires a purely infinite argument");
  if (lead->coeff().sign() <= 0)
    throw NonPositiveLeading("exp_of requires a positive leading coefficient");
  if (!purely_infinite_expansion(arg))
    throw NotPurelyInfinite(
        "exp_of argument has finite or infinitesimal expansion terms");
  return exp_of_any(arg);
}

Prototype pow_by_limit(const Prototype& f, const InNumber& g) {
  try {
    InNumber h = in_mul(g, log_of(f));
    MagnitudeParts parts = split_by_magnitude(h);
    if (parts.infinite.is_zero()) return Prototype::unit();
    return exp_of_any(parts.infinite);
  } catch (const TowerArithmeticError&) {
    throw;
  } catch (const Error& e) {
    throw FeedbackConditionViolated(std::string("feedback rule rejected: ") +
                                    e.what());
  }
}

bool dominates_all_powers(const Prototype& f, const Limit& t) {
  if (t.is_zero()) throw UndefinedError("dominates_all_powers: t is zero");
  if (t.leading().coeff().sign() <= 0)
    throw UndefinedError("dominates_all_powers: t must be positive");
  for (const auto& term : t.terms())
    if (is_infinitesimal(term.proto()))
      throw UndefinedError("dominates_all_powers: t has infinitesimal terms");
  InNumber lf = log_of(f);
  if (lf.is_zero()) return false;
  Prototype p = leading_term(lf)->proto();
  if (!is_infinite(p)) return false;
  const Prototype& q = t.leading().proto();
  if (is_unit(q)) return true;  // powers of a constant stay bounded
  auto lp = leading_term(log_of(p));
  auto lq = leading_term(log_of(q));
  return compare(lp->proto(), lq->proto()) == Ordering::Greater;
}

int cardinal_height(const Prototype& p) {
  if (p.is_unit_form()) return 0;
  const BaseAtom& dominant = p.factors().front().base;
  switch (dominant.kind()) {
    case BaseAtom::Kind::Log: return -dominant.log_depth();
    case BaseAtom::Kind::Tower:
      return dominant.tower_dir() == TowerDir::Exp ? kExpTowerHeight
                                                   : kLogTowerHeight;
    case BaseAtom::Kind::Exp: {
      auto lead = leading_term(dominant.exp_arg());
      return cardinal_height(lead->proto()) + 1;
    }
  }
  return 0;
}

bool is_infinite(const Prototype& p) {
  return compare(p, Prototype::unit()) == Ordering::Greater;
}

bool is_infinitesimal(const Prototype& p) {
  return compare(p, Prototype::unit()) == Ordering::Less;
}

bool is_unit(const Prototype& p) {
  return compare(p, Prototype::unit()) == Ordering::Equal;
}

}  // namespace omegalim
