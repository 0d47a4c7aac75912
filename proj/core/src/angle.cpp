#include "trigrat/angle.hpp"

#include <algorithm>
#include <numeric>

namespace trigrat {

namespace {

ReducedAngle from_fraction(const Rational& f, int sign) {
  return ReducedAngle{f.num(), f.den(), sign};
}

Rational fractional_part(const Rational& r, const Integer& period) {
  Rational scaled = r / Rational(period);
  return (scaled - Rational(scaled.floor())) * Rational(period);
}

}  // namespace

ReducedAngle reduce_for_tan(const Rational& r) {
  Rational f = fractional_part(r, 1);
  const Rational half(1, 2);
  if (f > half) return from_fraction(Rational(1) - f, -1);
  return from_fraction(f, 1);
}

ReducedAngle reduce_for_cos(const Rational& r) {
  Rational f = fractional_part(r, 2);
  if (f > Rational(1)) f = Rational(2) - f;
  return from_fraction(f, 1);
}

OddPart odd_part(const Integer& n) {
  if (n < 1) throw std::invalid_argument("odd_part: n must be positive");
  OddPart out;
  out.twos = mpz_scan1(n.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(out.odd.get_mpz_t(), n.get_mpz_t(), out.twos);
  return out;
}

Rational double_angle_forward(const Rational& t) {
  const Rational one(1);
  if (t == one) throw PoleError("double-angle map has a pole at T = 1");
  const Rational gap = one - t;
  return Rational(4) * t / (gap * gap);
}

std::vector<Rational> invert_double_angle(const Rational& D) {
  if (D.sign() < 0) throw std::domain_error("invert_double_angle: D must be nonnegative");
  if (D.is_zero()) return {Rational(0)};
  // Roots of D x^2 - 2(D+2) x + D: x = (D + 2 +- 2 sqrt(D + 1)) / D.
  const std::optional<Rational> k = is_perfect_square(D + Rational(1));
  if (!k) return {};
  const Rational mid = D + Rational(2);
  const Rational spread = Rational(2) * *k;
  std::vector<Rational> roots{(mid - spread) / D, (mid + spread) / D};
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Rational> integer_solutions_Eu(const Integer& u) {
  if (u <= 0 || mpz_even_p(u.get_mpz_t())) {
    throw std::invalid_argument("integer_solutions_Eu: u must be an odd positive integer");
  }
  std::vector<Rational> out;
  for (const Rational& x : invert_double_angle(Rational(u))) {
    if (x.is_integer()) out.push_back(x);
  }
  return out;
}

ReducedAngle double_for_tan_squared(const ReducedAngle& angle) {
  ReducedAngle next = reduce_for_tan(Rational(2) * angle.fraction());
  next.sign = 1;
  return next;
}

DoublingChain doubling_chain(const ReducedAngle& start, const Integer& stop_den) {
  if (stop_den < 1 || !mpz_divisible_p(start.n.get_mpz_t(), stop_den.get_mpz_t())) {
    throw std::invalid_argument("doubling_chain: stop denominator must divide the start");
  }
  const Integer ratio = start.n / stop_den;
  if (mpz_popcount(ratio.get_mpz_t()) != 1) {
    throw std::invalid_argument("doubling_chain: denominators must differ by a power of two");
  }
  DoublingChain chain;
  ReducedAngle a = start;
  a.sign = 1;
  chain.angles.push_back(a);
  while (a.n > stop_den) {
    a = double_for_tan_squared(a);
    chain.angles.push_back(a);
  }
  if (a.n != stop_den) throw std::invalid_argument("doubling_chain: start is not in lowest terms");
  return chain;
}

std::vector<unsigned long> sweep_numerators(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 0; d <= n; ++d) {
    if (std::gcd(d, n) == 1) out.push_back(d);
  }
  return out;
}

std::vector<Rational> sweep_angles(unsigned long max_den) {
  std::vector<Rational> out;
  for (unsigned long n = 1; n <= max_den; ++n) {
    for (unsigned long d : sweep_numerators(n)) out.emplace_back(Integer(d), Integer(n));
  }
  return out;
}

}  // namespace trigrat
