#include "omegalim/render.hpp"

#include <cstdio>

namespace omegalim {

namespace {

std::string index_name(const RenderOptions& opts) {
  return opts.unicode ? "ω" : "w";
}

std::string exponent_string(const Scalar& e) {
  if (e.is_integer()) return e.str();
  return "(" + e.str() + ")";
}

// One factor rendered for the side of the fraction it lives on (exponents
// printed positive; the caller picks the side by sign).
std::string factor_string(const BaseAtom& base, const Scalar& abs_exp,
                          const RenderOptions& opts) {
  if (base.kind() == BaseAtom::Kind::Exp) {
    // Fold the exponent into the argument: exp(w)^2 prints as exp(2*w).
    InNumber arg = abs_exp.is_one() ? base.exp_arg()
                                    : in_scale(base.exp_arg(), abs_exp);
    return "exp(" + render(arg, opts) + ")";
  }
  std::string s = render(base, opts);
  if (!abs_exp.is_one()) s += "^" + exponent_string(abs_exp);
  return s;
}

}  // namespace

std::string render(const Scalar& s) { return s.str(); }

std::string render(const BaseAtom& b, const RenderOptions& opts) {
  switch (b.kind()) {
    case BaseAtom::Kind::Log: {
      std::string s = index_name(opts);
      for (int i = 0; i < b.log_depth(); ++i) s = "ln(" + s + ")";
      return s;
    }
    case BaseAtom::Kind::Exp:
      return "exp(" + render(b.exp_arg(), opts) + ")";
    case BaseAtom::Kind::Tower:
      return (b.tower_dir() == TowerDir::Exp ? "exp^" : "ln^") +
             index_name(opts) + "(" + index_name(opts) + ")";
  }
  return "";
}

std::string render(const Prototype& p, const RenderOptions& opts) {
  if (p.is_unit_form()) return "1";
  std::string num, den;
  for (const auto& f : p.factors()) {
    if (f.exponent.sign() > 0) {
      if (!num.empty()) num += "*";
      num += factor_string(f.base, f.exponent, opts);
    } else {
      den += "/" + factor_string(f.base, f.exponent.abs(), opts);
    }
  }
  if (num.empty()) num = "1";
  return num + den;
}

std::string render(const Term& t, const RenderOptions& opts) {
  Scalar c = t.coeff();
  std::string sign = c.sign() < 0 ? "-" : "";
  c = c.abs();
  if (t.proto().is_unit_form()) return sign + c.str();
  std::string body = render(t.proto(), opts);
  if (c.is_one()) return sign + body;
  // A leading "1/..." prototype folds the coefficient into the numerator.
  if (body.rfind("1/", 0) == 0) return sign + c.str() + body.substr(1);
  return sign + c.str() + "*" + body;
}

std::string render(const Limit& l, const RenderOptions& opts) {
  if (l.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < l.terms().size(); ++i) {
    const Term& t = l.terms()[i];
    std::string piece = render(Term(t.coeff().abs(), t.proto()), opts);
    if (i == 0) {
      out = (t.coeff().sign() < 0 ? "-" : "") + piece;
    } else {
      out += (t.coeff().sign() < 0 ? " - " : " + ") + piece;
    }
  }
  return out;
}

std::string render(const InNumber& x, const RenderOptions& opts) {
  if (x.den().is_one()) return render(x.num(), opts);
  // The numerator tolerates '*' and '/' (division is left-associative); the
  // denominator must be a single atomic factor to go bare.
  std::string num = render(x.num(), opts);
  if (x.num().terms().size() != 1 || x.num().leading().coeff().sign() < 0)
    num = "(" + num + ")";
  std::string den = render(x.den(), opts);
  if (x.den().terms().size() != 1 || x.den().leading().coeff().sign() < 0 ||
      den.find_first_of("*/ ") != std::string::npos)
    den = "(" + den + ")";
  return num + "/" + den;
}

std::string render(const TowerValue& v) {
  if (v.is_zero()) return "0";
  char buf[64];
  if (v.height() == 0) {
    std::snprintf(buf, sizeof buf, "%.12g", v.sign() * v.mantissa());
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%sexp^%d(%.12g)", v.sign() < 0 ? "-" : "",
                v.height(), v.mantissa());
  return buf;
}

}  // namespace omegalim
