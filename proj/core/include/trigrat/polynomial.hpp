#pragma once

#include <string>
#include <vector>

#include "trigrat/exact.hpp"

namespace trigrat {

/// Univariate polynomial with integer coefficients, stored in ascending
/// degree order (coeffs()[j] multiplies X^j). The zero polynomial has no
/// coefficients; any other polynomial has a nonzero leading coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of X^j (zero beyond the degree).
  Integer coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Integer(0); }
  const Integer& leading() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "[c0, c1, ...]", ascending.
  std::string str() const;

 private:
  std::vector<Integer> coeffs_;
};

/// P_n = sum_{j=0}^{m} (-1)^(m+j) C(n, 2j+1) X^(2j), m = (n-1)/2.
/// Its roots are tan(k pi / n), k = 1..n-1. Requires n odd, n >= 3.
IntPolynomial build_P(const Integer& n);

/// Q_n = sum_{j=0}^{m} (-1)^(m+j) C(n, 2j+1) X^j, so that Q_n(X^2) = P_n(X).
/// Monic of degree m with constant term (-1)^m n. Requires n odd, n >= 3.
IntPolynomial build_Q(const Integer& n);

/// Exact p(x).
Rational eval_at_rational(const IntPolynomial& p, const Rational& x);

/// Every rational root of p, ascending, without multiplicity. Candidates are
/// +-a/b with a | (lowest nonzero coefficient), b | (leading coefficient);
/// 0 is reported iff the constant term vanishes. Throws std::invalid_argument
/// for the zero polynomial.
std::vector<Rational> rational_roots(const IntPolynomial& p);

}  // namespace trigrat
