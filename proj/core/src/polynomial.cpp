#include "trigrat/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trigrat {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::string IntPolynomial::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) os << ", ";
    os << coeffs_[i].get_str();
  }
  os << ']';
  return os.str();
}

namespace {

// Signed odd-index binomials (-1)^(m+j) C(n, 2j+1) for j = 0..m.
std::vector<Integer> signed_odd_binomials(const Integer& n_big) {
  if (n_big < 3 || mpz_even_p(n_big.get_mpz_t())) {
    throw std::invalid_argument("n must be odd and at least 3, got " + n_big.get_str());
  }
  const unsigned long n = to_ulong(n_big, "polynomial degree");
  const unsigned long m = (n - 1) / 2;

  std::vector<Integer> out(m + 1);
  Integer c = 1;  // C(n, k), advanced along k
  for (unsigned long k = 0; k <= n; ++k) {
    if (k % 2 == 1) {
      const unsigned long j = (k - 1) / 2;
      out[j] = ((m + j) % 2 == 0) ? c : Integer(-c);
    }
    c *= n - k;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
  }
  return out;
}

}  // namespace

IntPolynomial build_P(const Integer& n) {
  const std::vector<Integer> b = signed_odd_binomials(n);
  std::vector<Integer> coeffs(2 * b.size() - 1);
  for (std::size_t j = 0; j < b.size(); ++j) coeffs[2 * j] = b[j];
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial build_Q(const Integer& n) { return IntPolynomial(signed_odd_binomials(n)); }

Rational eval_at_rational(const IntPolynomial& p, const Rational& x) {
  if (p.is_zero()) return Rational(0);
  const auto& c = p.coeffs();
  const Integer a = x.num();
  const Integer b = x.den();
  // Homogenised Horner: acc = sum_j c_j a^j b^(deg-j), then divide by b^deg.
  Integer acc = c.back();
  if (b == 1) {
    for (std::size_t j = c.size() - 1; j-- > 0;) {
      acc *= a;
      acc += c[j];
    }
    return Rational(acc);
  }
  Integer bpow = 1;
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    bpow *= b;
    acc *= a;
    acc += c[j] * bpow;
  }
  return Rational(acc, bpow);
}

std::vector<Rational> rational_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  const auto& c = p.coeffs();

  std::size_t low = 0;
  while (c[low] == 0) ++low;

  std::vector<Rational> roots;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 < c.size()) {
    const IntPolynomial reduced(std::vector<Integer>(c.begin() + static_cast<long>(low), c.end()));
    const Integer c0 = abs(reduced.coeffs().front());
    const Integer cn = abs(reduced.leading());
    const std::vector<Integer> nums = divisors(c0);
    const std::vector<Integer> dens = divisors(cn);
    for (const Integer& a : nums) {
      for (const Integer& b : dens) {
        if (gcd(a, b) != 1) continue;
        for (const Rational& cand : {Rational(a, b), Rational(Integer(-a), b)}) {
          if (eval_at_rational(reduced, cand).is_zero()) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace trigrat
