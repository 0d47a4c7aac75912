#pragma once

// Rational angles r (meaning r*pi) and the double-angle algebra on tan^2:
//   T -> 4T / (1 - T)^2
// together with its exact inverse through the quadratic
//   D x^2 - 2(D + 2) x + D = 0.

#include <stdexcept>
#include <vector>

#include "trigrat/exact.hpp"

namespace trigrat {

/// Canonical representative d/n (gcd(d, n) = 1, n >= 1) of a rational angle.
/// For tan reduction 0 <= d/n <= 1/2 and tan(r pi) = sign * tan(d/n pi);
/// for cos reduction 0 <= d/n <= 1 and sign is always +1.
struct ReducedAngle {
  Integer d;
  Integer n = 1;
  int sign = 1;

  Rational fraction() const { return Rational(d, n); }
  /// True for 1/2, where tan has its pole.
  bool is_tan_pole() const { return n == 2; }

  friend bool operator==(const ReducedAngle&, const ReducedAngle&) = default;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

ReducedAngle reduce_for_tan(const Rational& r);
ReducedAngle reduce_for_cos(const Rational& r);

struct OddPart {
  unsigned long twos = 0;  // a in n = 2^a q
  Integer odd;             // q
};

/// n = 2^twos * odd with odd odd. Requires n >= 1.
OddPart odd_part(const Integer& n);

/// 4T / (1 - T)^2, i.e. tan^2(2x) from T = tan^2(x). Throws PoleError at T = 1.
Rational double_angle_forward(const Rational& t);

/// All rational T >= 0 with double_angle_forward(T) = D, ascending. Two
/// reciprocal roots when D + 1 is a rational square and D != 0, {0} for
/// D = 0, empty otherwise. Throws std::domain_error when D < 0.
std::vector<Rational> invert_double_angle(const Rational& D);

/// Integral members of invert_double_angle(u) for an odd positive integer u.
/// Throws std::invalid_argument otherwise.
std::vector<Rational> integer_solutions_Eu(const Integer& u);

struct DoublingChain {
  std::vector<ReducedAngle> angles;
};

/// Doubles start repeatedly (folding each result into [0, 1/2]) until the
/// denominator equals stop_den. Requires stop_den | start.n with a power-of-two
/// quotient; throws std::invalid_argument otherwise.
DoublingChain doubling_chain(const ReducedAngle& start, const Integer& stop_den);

/// Every reduced d/n with 1 <= n <= max_den and 0 <= d <= n, ordered by
/// (n, d). Covers a full tan period and the cos range [0, 1].
std::vector<Rational> sweep_angles(unsigned long max_den);

/// Reduced numerators d in [0, n] coprime to n, ascending.
std::vector<unsigned long> sweep_numerators(unsigned long n);

/// One doubling step: reduce_for_tan(2 * angle), sign discarded.
ReducedAngle double_for_tan_squared(const ReducedAngle& angle);

}  // namespace trigrat
