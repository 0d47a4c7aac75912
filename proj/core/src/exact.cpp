#include "trigrat/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace trigrat {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rational::from_canonical(a.value_ / b.value_);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!is_decimal(digits)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  Integer v(std::string(digits), 10);
  return negative ? Integer(-v) : v;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  // The denominator carries no sign of its own.
  if (!is_decimal(den_text)) {
    throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  }
  return Rational(num, Integer(std::string(den_text), 10));
}

Rational parse_canonical_rational(std::string_view text) {
  Rational r = parse_rational(text);
  if (r.str() != text) {
    throw std::invalid_argument("non-canonical rational '" + std::string(text) + "'");
  }
  return r;
}

std::vector<Integer> divisors(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<Integer> low;
  std::vector<Integer> high;
  Integer i = 1;
  for (; i * i < n; ++i) {
    if (mpz_divisible_p(n.get_mpz_t(), i.get_mpz_t())) {
      low.push_back(i);
      high.push_back(n / i);
    }
  }
  if (i * i == n) low.push_back(i);
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Integer integer_sqrt(const Integer& x) {
  if (x < 0) throw std::domain_error("integer_sqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::optional<Rational> is_perfect_square(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  // Lowest terms: q is a rational square iff num and den are both squares.
  const Integer num = q.num();
  const Integer den = q.den();
  const Integer rn = integer_sqrt(num);
  if (rn * rn != num) return std::nullopt;
  const Integer rd = integer_sqrt(den);
  if (rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

unsigned long to_ulong(const Integer& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p()) {
    throw std::out_of_range(std::string(what) + ": value out of machine range");
  }
  return v.get_ui();
}

Integer binomial(const Integer& n, const Integer& k) {
  if (k < 0 || k > n) throw std::out_of_range("binomial: k outside [0, n]");
  Integer r;
  const unsigned long kk = to_ulong(std::min<Integer>(k, n - k), "binomial");
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), kk);
  return r;
}

}  // namespace trigrat
