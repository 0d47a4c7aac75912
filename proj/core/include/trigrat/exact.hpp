#pragma once

// Arbitrary-precision integers and canonical rationals, plus the handful of
// number-theory helpers the rest of the library builds on.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace trigrat {

using Integer = mpz_class;

/// Exact fraction, always stored in lowest terms with a positive denominator.
/// Zero is 0/1. Two rationals are equal iff their canonical forms are equal.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT: integers convert implicitly
  Rational(const Integer& v) : value_(v) {}  // NOLINT

  /// Throws std::domain_error on a zero denominator.
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return from_canonical(-value_); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_canonical(a.value_ + b.value_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_canonical(a.value_ - b.value_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_canonical(a.value_ * b.value_);
  }
  /// Throws std::domain_error when dividing by zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// floor(this) as an integer.
  Integer floor() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const { return value_.get_str(); }

  /// Wraps an mpq that the caller guarantees to be canonical.
  static Rational from_canonical(mpq_class v) {
    Rational r;
    r.value_ = std::move(v);
    return r;
  }

 private:
  mpq_class value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// Nonnegative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

/// Canonical num/den. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "[+-]p" or "[+-]p/q" with q > 0 in decimal. Non-canonical input
/// ("2/6") is accepted and reduced. Throws std::invalid_argument on bad text
/// and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

/// Like parse_rational but additionally requires the text to be the
/// canonical rendering (as produced by Rational::str()).
Rational parse_canonical_rational(std::string_view text);

/// Decimal integer parse; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// Positive divisors of n in ascending order by trial division up to sqrt(n).
/// Throws std::invalid_argument when n <= 0.
std::vector<Integer> divisors(const Integer& n);

/// floor(sqrt(x)). Throws std::domain_error when x < 0.
Integer integer_sqrt(const Integer& x);

/// The nonnegative rational square root of q if q is the square of a
/// rational, nullopt otherwise (including every negative q).
std::optional<Rational> is_perfect_square(const Rational& q);

/// C(n, k). Throws std::out_of_range unless 0 <= k <= n.
Integer binomial(const Integer& n, const Integer& k);

/// Converts an Integer that must fit in an unsigned long; throws
/// std::out_of_range otherwise.
unsigned long to_ulong(const Integer& v, const char* what);

}  // namespace trigrat
