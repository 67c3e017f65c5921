#include "omegalim/scalar.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "omegalim/errors.hpp"

namespace omegalim {

Scalar Scalar::ratio(BigInt num, BigInt den) {
  if (den == 0) throw DivisionByZero("scalar denominator is zero");
  // The two-argument cpp_rational constructor rejects negative denominators.
  return Scalar(BigRational(std::move(num)) / BigRational(std::move(den)));
}

Scalar Scalar::rounded(double v) {
  if (!std::isfinite(v)) throw UndefinedError("non-finite constant");
  // Every finite double is m * 2^e, hence exactly rational.
  int exp = 0;
  double m = std::frexp(v, &exp);
  BigInt mant(static_cast<long long>(std::ldexp(m, 53)));
  exp -= 53;
  BigRational r(mant);
  if (exp >= 0) {
    r *= BigRational(BigInt(1) << exp);
  } else {
    r /= BigRational(BigInt(1) << -exp);
  }
  return Scalar(std::move(r), /*exact=*/false);
}

std::optional<Scalar> Scalar::from_literal(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '-' || text[i] == '+') {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    return std::nullopt;
  BigInt intpart = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    intpart = intpart * 10 + (text[i] - '0');
    ++i;
  }
  BigRational value(intpart);
  if (i < text.size() && text[i] == '.') {
    ++i;
    BigInt frac = 0;
    BigInt scale = 1;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      return std::nullopt;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      frac = frac * 10 + (text[i] - '0');
      scale *= 10;
      ++i;
    }
    value += BigRational(frac, scale);
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    BigInt den = 0;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      return std::nullopt;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      den = den * 10 + (text[i] - '0');
      ++i;
    }
    if (den == 0) return std::nullopt;
    value /= BigRational(den);
  }
  if (i != text.size()) return std::nullopt;
  if (neg) value = -value;
  return Scalar(std::move(value));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  return Scalar(BigRational(1) / value_, exact_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero("scalar division by zero");
  return Scalar(a.value_ / b.value_, a.exact_ && b.exact_);
}

std::string Scalar::str() const {
  std::string s = num().str();
  if (!is_integer()) {
    s += "/";
    s += den().str();
  }
  return s;
}

Scalar pow_int(const Scalar& x, long long k) {
  if (k == 0) return Scalar(1);
  if (x.is_zero()) {
    if (k < 0) throw DivisionByZero("zero raised to a negative power");
    return Scalar(0);
  }
  Scalar base = k < 0 ? x.inverse() : x;
  unsigned long long n =
      k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
            : static_cast<unsigned long long>(k);
  Scalar result(1);
  while (n > 0) {
    if (n & 1ull) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

namespace {

std::optional<BigInt> exact_int_root(const BigInt& x, unsigned k) {
  if (x < 0) return std::nullopt;
  if (x == 0 || x == 1 || k == 1) return x;
  // Seed with a double estimate, then fix up; the exact check below is what
  // decides.
  double est = std::pow(x.convert_to<double>(), 1.0 / k);
  if (!std::isfinite(est)) return std::nullopt;
  BigInt guess(static_cast<long long>(std::llround(est)));
  for (BigInt c = guess - 2; c <= guess + 2; ++c) {
    if (c < 0) continue;
    if (boost::multiprecision::pow(c, k) == x) return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Scalar> try_exact_root(const Scalar& x, unsigned k) {
  if (k == 0) return std::nullopt;
  bool neg = x.negative();
  if (neg && k % 2 == 0) return std::nullopt;
  auto rn = exact_int_root(neg ? BigInt(-x.num()) : x.num(), k);
  if (!rn) return std::nullopt;
  auto rd = exact_int_root(x.den(), k);
  if (!rd) return std::nullopt;
  Scalar r = Scalar::ratio(*rn, *rd).with_exactness(x.exact());
  return neg ? -r : r;
}

namespace {

Scalar rounded_or_throw(double v, bool allow_round, const char* what) {
  if (!allow_round)
    throw UndefinedError(std::string("irrational constant from ") + what +
                         " (exact-constants mode)");
  return Scalar::rounded(v);
}

}  // namespace

Scalar scalar_ln(const Scalar& x, bool allow_round) {
  if (x.sign() <= 0) throw UndefinedError("logarithm of a non-positive constant");
  if (x.is_one()) return Scalar(0).with_exactness(x.exact());
  Scalar r = rounded_or_throw(std::log(x.to_double()), allow_round, "ln");
  return x.exact() ? r : r.with_exactness(false);
}

Scalar scalar_exp(const Scalar& x, bool allow_round) {
  if (x.is_zero()) return Scalar(1).with_exactness(x.exact());
  double v = std::exp(x.to_double());
  if (!std::isfinite(v) || v == 0.0)
    throw UndefinedError("exp of constant overflows double range");
  Scalar r = rounded_or_throw(v, allow_round, "exp");
  return x.exact() ? r : r.with_exactness(false);
}

Scalar scalar_sin(const Scalar& x, bool allow_round) {
  if (x.is_zero()) return Scalar(0).with_exactness(x.exact());
  Scalar r = rounded_or_throw(std::sin(x.to_double()), allow_round, "sin");
  return x.exact() ? r : r.with_exactness(false);
}

Scalar scalar_cos(const Scalar& x, bool allow_round) {
  if (x.is_zero()) return Scalar(1).with_exactness(x.exact());
  Scalar r = rounded_or_throw(std::cos(x.to_double()), allow_round, "cos");
  return x.exact() ? r : r.with_exactness(false);
}

Scalar scalar_pow(const Scalar& base, const Scalar& exponent,
                  bool allow_round) {
  if (exponent.is_integer()) {
    if (exponent.num() > std::numeric_limits<long long>::max() ||
        exponent.num() < std::numeric_limits<long long>::min())
      throw UndefinedError("integer exponent too large");
    return pow_int(base, exponent.num().convert_to<long long>());
  }
  if (base.is_zero()) {
    if (exponent.negative())
      throw DivisionByZero("zero raised to a negative power");
    return Scalar(0);
  }
  if (base.negative())
    throw UndefinedError("negative base with fractional exponent");
  // Try base^(p/q) = (base^(1/q))^p exactly.
  if (exponent.den() <= 64) {
    unsigned q = exponent.den().convert_to<unsigned>();
    if (auto root = try_exact_root(base, q)) {
      if (exponent.num() <= std::numeric_limits<long long>::max() &&
          exponent.num() >= std::numeric_limits<long long>::min())
        return pow_int(*root, exponent.num().convert_to<long long>());
    }
  }
  double v = std::pow(base.to_double(), exponent.to_double());
  if (!std::isfinite(v))
    throw UndefinedError("constant power overflows double range");
  Scalar r = rounded_or_throw(v, allow_round, "pow");
  return (base.exact() && exponent.exact()) ? r : r.with_exactness(false);
}

}  // namespace omegalim
