#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "omegalim/ordering.hpp"

namespace omegalim {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact rational scalar. Folding a transcendental constant (ln 2, e, sin 1,
// ...) rounds it to the nearest double and clears the exact() flag; the flag
// propagates through arithmetic so results can be reported as approximate.
// Ordering and equality look at the value only.
class Scalar {
public:
  Scalar() : value_(0) {}
  Scalar(int v) : value_(v) {}
  Scalar(long long v) : value_(v) {}
  explicit Scalar(BigRational v, bool exact = true)
      : value_(std::move(v)), exact_(exact) {}

  static Scalar ratio(BigInt num, BigInt den);
  // Exact rational value of the given double, marked inexact.
  static Scalar rounded(double v);
  // Parses "123", "-4.75", "1/3"; returns nullopt on malformed input.
  static std::optional<Scalar> from_literal(const std::string& text);

  const BigRational& value() const { return value_; }
  bool exact() const { return exact_; }
  Scalar with_exactness(bool e) const { return Scalar(value_, e); }

  bool is_zero() const { return numerator(value_).is_zero(); }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return denominator(value_) == 1; }
  int sign() const { return numerator(value_).sign(); }
  bool negative() const { return sign() < 0; }

  double to_double() const { return value_.convert_to<double>(); }
  BigInt num() const { return numerator(value_); }
  BigInt den() const { return denominator(value_); }

  Scalar abs() const { return Scalar(value_ < 0 ? -value_ : value_, exact_); }
  Scalar inverse() const;

  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.value_ + b.value_, a.exact_ && b.exact_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.value_ - b.value_, a.exact_ && b.exact_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.value_ * b.value_, a.exact_ && b.exact_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a) {
    return Scalar(-a.value_, a.exact_);
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return numerator(a.value_) == numerator(b.value_) &&
           denominator(a.value_) == denominator(b.value_);
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Cross-multiplication; denominators are positive by construction. The
  // generic rational comparison runs a division loop that is far slower on
  // arbitrary-precision integers.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return numerator(a.value_) * denominator(b.value_) <
           numerator(b.value_) * denominator(a.value_);
  }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

private:
  BigRational value_;
  bool exact_ = true;
};

inline Ordering scalar_compare(const Scalar& a, const Scalar& b) {
  if (a < b) return Ordering::Less;
  if (b < a) return Ordering::Greater;
  return Ordering::Equal;
}

// x^k for integer k; throws DivisionByZero on 0^negative.
Scalar pow_int(const Scalar& x, long long k);

// Exact k-th root when one exists (numerator and denominator are perfect
// k-th powers), respecting sign rules for odd k.
std::optional<Scalar> try_exact_root(const Scalar& x, unsigned k);

// Transcendental constant folding. Results are exact where the exact value
// is rational (ln 1, exp 0, sin 0, cos 0, rational powers with exact roots)
// and otherwise rounded to double. With allow_round == false a rounding
// situation raises UndefinedError instead.
Scalar scalar_ln(const Scalar& x, bool allow_round);
Scalar scalar_exp(const Scalar& x, bool allow_round);
Scalar scalar_sin(const Scalar& x, bool allow_round);
Scalar scalar_cos(const Scalar& x, bool allow_round);
Scalar scalar_pow(const Scalar& base, const Scalar& exponent, bool allow_round);

}  // namespace omegalim
