#pragma once

// Certified enclosures of trigonometric values at rational multiples of pi.
//
// Every interval returned here has exact rational (dyadic) endpoints and is
// guaranteed to contain the true real value. The computation runs on MPFR
// with directed rounding; the working precision grows until the requested
// width is met, so results depend only on (angle, bits).

#include <vector>

#include "trigrat/angle.hpp"
#include "trigrat/classifier.hpp"
#include "trigrat/exact.hpp"
#include "trigrat/polynomial.hpp"

namespace trigrat {

struct RatInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  /// True iff x lies strictly outside [lo, hi].
  bool excludes(const Rational& x) const { return x < lo || x > hi; }
  bool contains_zero() const { return contains(Rational(0)); }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) * Rational(1, 2); }

  friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
/// Tight enclosure of {x^2 : x in a}.
RatInterval square(const RatInterval& a);
bool intersects(const RatInterval& a, const RatInterval& b);

/// Smallest accepted precision request.
inline constexpr unsigned kMinBits = 8;

/// Enclosure of pi of width <= 2^(1-bits), cached per precision.
RatInterval pi_interval(unsigned bits);

/// Enclosure of tan^2(angle * pi) of width <= 2^(1-bits). Throws PoleError
/// when the angle reduces to 1/2 and std::invalid_argument when bits < 8.
/// For b2 > b1 the b2 enclosure lies inside the b1 enclosure.
RatInterval eval_tan_squared(const ReducedAngle& angle, unsigned bits);

/// Enclosure of tan(r * pi); same contract as eval_tan_squared.
RatInterval eval_tan(const Rational& r, unsigned bits);

/// Enclosure of cos(angle * pi) of width <= 2^(1-bits). Throws
/// std::invalid_argument when bits < 8.
RatInterval eval_cos(const ReducedAngle& angle, unsigned bits);

/// Interval Horner evaluation of p over x.
RatInterval eval_polynomial(const IntPolynomial& p, const RatInterval& x);

struct ResidualEnclosure {
  RatInterval image;  // encloses p(tan^2(angle * pi))
  unsigned bits = 0;  // precision used for the tan^2 enclosure
};

/// Encloses p(tan^2(angle * pi)) in an interval of width < 2^(-target_bits),
/// raising the input precision as far as the growth of p requires.
ResidualEnclosure residual_enclosure(const IntPolynomial& p, const ReducedAngle& angle,
                                     unsigned target_bits);

/// The rationals f can take at rational angles other than poles.
std::vector<Rational> exceptional_values(TrigFunction f);

/// Numerical sanity check of a verdict for f(r pi):
///   Exact v     -> v lies in the enclosure at `bits`;
///   Pole        -> the tan reduction of r is exactly 1/2 (tan, tan2 only);
///   Irrational  -> some enclosure (bits doubled up to 4096) excludes every
///                  exceptional value of f.
bool crosscheck(const Rational& r, TrigFunction f, const TrigVerdict& verdict, unsigned bits);

}  // namespace trigrat
