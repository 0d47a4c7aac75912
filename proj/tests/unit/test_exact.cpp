#include <doctest.h>

#include <stdexcept>

#include "../support/oracles.hpp"
#include "trigrat/exact.hpp"

using namespace trigrat;

TEST_CASE("gcd") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(-7, 0) == 7);
  CHECK(gcd(0, 0) == 0);
  // k - 1 and k + 1 for k = 2
  CHECK(gcd(1, 3) == 1);
}

TEST_CASE("make_rational canonicalises") {
  CHECK(make_rational(2, 6) == Rational(1, 3));
  CHECK(make_rational(3, -9).str() == "-1/3");
  CHECK(make_rational(10, 1).num() == 10);
  CHECK(make_rational(10, 1).den() == 1);
  CHECK(make_rational(0, -5).den() == 1);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("-1/4") == Rational(-1, 4));
  CHECK(parse_rational("+2/6") == Rational(1, 3));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
  CHECK_THROWS_AS(parse_rational("1/-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_canonical_rational("2/6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_canonical_rational("05"), std::invalid_argument);
  CHECK(parse_canonical_rational("-1/3") == Rational(-1, 3));
}

TEST_CASE("divisors") {
  CHECK(divisors(15) == std::vector<Integer>{1, 3, 5, 15});
  CHECK(divisors(1) == std::vector<Integer>{1});
  CHECK(divisors(9) == std::vector<Integer>{1, 3, 9});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
  CHECK_THROWS_AS(divisors(-4), std::invalid_argument);

  for (long n = 1; n <= 2000; ++n) {
    const auto ds = divisors(n);
    REQUIRE(ds.front() == 1);
    REQUIRE(ds.back() == n);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      REQUIRE(n % ds[i].get_si() == 0);
      REQUIRE(ds[i] * ds[ds.size() - 1 - i] == n);
      if (i > 0) REQUIRE(ds[i - 1] < ds[i]);
    }
    long count = 0;
    for (long k = 1; k <= n; ++k) count += (n % k == 0);
    REQUIRE(static_cast<long>(ds.size()) == count);
  }
}

TEST_CASE("integer_sqrt") {
  CHECK(integer_sqrt(4) == 2);
  CHECK(integer_sqrt(32) == 5);
  CHECK(Integer(5 * 5) != 32);
  CHECK(integer_sqrt(0) == 0);
  CHECK_THROWS_AS(integer_sqrt(-1), std::domain_error);

  auto g = oracle::rng(0x5eed);
  for (int i = 0; i < 10000; ++i) {
    const Integer x = oracle::random_integer(g, 256);
    const Integer r = integer_sqrt(x);
    REQUIRE(r * r <= x);
    REQUIRE(x < (r + 1) * (r + 1));
  }
}

TEST_CASE("is_perfect_square") {
  CHECK(is_perfect_square(Rational(4)) == Rational(2));
  CHECK_FALSE(is_perfect_square(Rational(2)).has_value());
  CHECK(is_perfect_square(Rational(4, 9)) == Rational(2, 3));
  CHECK_FALSE(is_perfect_square(Rational(-4)).has_value());
  CHECK_FALSE(is_perfect_square(Rational(1, 2)).has_value());
  CHECK(is_perfect_square(Rational(0)) == Rational(0));
}

TEST_CASE("binomial against Pascal's triangle") {
  const auto t = oracle::pascal_triangle(64);
  CHECK(binomial(7, 3) == t[7][3]);
  CHECK(t[7][3] == 35);
  CHECK(binomial(5, 3) == t[5][3]);
  CHECK(t[5][3] == 10);
  CHECK(binomial(12, 0) == 1);
  CHECK_THROWS_AS(binomial(3, 4), std::out_of_range);
  CHECK_THROWS_AS(binomial(3, -1), std::out_of_range);

  for (long n = 0; n <= 64; ++n) {
    for (long k = 0; k <= n; ++k) {
      REQUIRE(binomial(n, k) == t[n][k]);
      REQUIRE(binomial(n, k) == binomial(n, n - k));
      if (n > 0 && k > 0 && k < n) REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("rational arithmetic stays canonical") {
  auto g = oracle::rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = oracle::random_rational(g, 1000, 1000);
    const Rational b = oracle::random_rational(g, 1000, 1000);
    for (const Rational& r : {a + b, a - b, a * b}) {
      REQUIRE(r.den() > 0);
      REQUIRE(gcd(r.num(), r.den()) == 1);
    }
    if (!b.is_zero()) {
      const Rational q = a / b;
      REQUIRE(q.den() > 0);
      REQUIRE(gcd(q.num(), q.den()) == 1);
      REQUIRE(q * b == a);
    }
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(-7, 2).floor() == -4);
}
