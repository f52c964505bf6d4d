#include <doctest.h>

#include <numeric>
#include <random>

#include "cychom/error.hpp"
#include "cychom/transforms.hpp"

using namespace cychom;

namespace {

SignedSeries mono(int n, int q, int s, long c = 1) { return SignedSeries::monomial(n, q, s, c); }
SignedSeries one(int n) { return SignedSeries::one(n); }

SignedSeries random_positive(std::mt19937_64& rng, int n, int max_coef) {
  std::uniform_int_distribution<int> d(0, max_coef);
  SignedSeries s(n);
  for (int q = 1; q <= n; ++q) s.at(q) = CoefPair{d(rng), d(rng)};
  return s;
}

SignedSeries random_rational(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-4, 4);
  SignedSeries s(n);
  for (int q = 1; q <= n; ++q) {
    Rational r(d(rng), 1 + (d(rng) + 4) % 3);
    r.canonicalize();
    s.at(q) = CoefPair{r, d(rng)};
  }
  return s;
}

// Number of necklaces of length q over d colours, (1/q) sum_{k|q} phi(k) d^{q/k}.
Integer necklaces(int q, int d) {
  Integer s = 0;
  for (int k = 1; k <= q; ++k) {
    if (q % k) continue;
    int phi = 0;
    for (int j = 1; j <= k; ++j) phi += std::gcd(j, k) == 1;
    Integer p = 1;
    for (int i = 0; i < q / k; ++i) p *= d;
    s += phi * p;
  }
  return s / q;
}

// Words of length q over 3 letters sorted non-decreasingly: C(q+2, 2).
long sorted_words(int q) {
  long count = 0;
  for (int a = 0; a <= q; ++a) count += q - a + 1;
  return count;
}

}  // namespace

TEST_CASE("number-theoretic tables") {
  const auto mu = mobius_table(12);
  CHECK(std::vector<int>(mu.begin() + 1, mu.end()) == std::vector<int>{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0});
  const auto phi = totient_table(12);
  CHECK(std::vector<long>(phi.begin() + 1, phi.end()) == std::vector<long>{1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4});
  CHECK_THROWS_AS(LogCWeights({Rational(0)}), DomainError);
}

TEST_CASE("exp and log") {
  const int n = 10;
  CHECK(exp_series(SignedSeries(n)) == one(n));
  CHECK(log_series(one(n)) == SignedSeries(n));
  const SignedSeries x = mono(n, 1, 0) + mono(n, 2, 1);
  CHECK(log_series(exp_series(x)) == x);
  const SignedSeries l = log_series(invert(one(n) - mono(n, 1, 0)));
  for (int q = 1; q <= n; ++q) CHECK(l.even(q) == Rational(1, q));
  CHECK_THROWS_AS(exp_series(one(n)), DomainError);
  CHECK_THROWS_AS(log_series(mono(n, 1, 0)), DomainError);
}

TEST_CASE("exp is a homomorphism and log its inverse on random input") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_rational(rng, 8);
    const auto b = random_rational(rng, 8);
    CHECK(exp_series(a + b) == exp_series(a) * exp_series(b));
    CHECK(log_series(exp_series(a) * exp_series(b)) == a + b);
  }
}

TEST_CASE("sym_exp") {
  const int n = 8;
  const SignedSeries geo = invert(one(n) - mono(n, 1, 0));
  CHECK(sym_exp(mono(n, 1, 0)) == geo);
  CHECK(sym_exp(mono(n, 1, 1)) == one(n) + mono(n, 1, 1));
  const SignedSeries s3 = sym_exp(mono(n, 1, 0, 3));
  for (int q = 0; q <= 6; ++q) CHECK(s3.even(q) == sorted_words(q));
  SignedSeries half(n);
  half.at(1).even = Rational(1, 2);
  CHECK_THROWS_AS(sym_exp(half), DomainError);
  // (1 - z)^{-1/2}
  const SignedSeries root = sym_exp(half, Exponents::kAllowRational);
  CHECK(root * root == geo);
}

TEST_CASE("lie_log") {
  const int n = 12;
  CHECK(lie_log(invert(one(n) - mono(n, 1, 0))) == mono(n, 1, 0));
  CHECK(lie_log(one(n) + mono(n, 1, 1)) == mono(n, 1, 1));
  const SignedSeries free2 = lie_log(invert(one(n) - mono(n, 1, 0, 2)));
  const long expected[] = {0, 2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335};
  for (int q = 1; q <= n; ++q) CHECK(free2.even(q) == expected[q]);
}

TEST_CASE("S and Lie are inverse") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    const auto v = random_positive(rng, 12, 3);
    CHECK(lie_log(sym_exp(v)) == v);
    const auto x = one(12) + random_positive(rng, 12, 4) - random_positive(rng, 12, 2);
    CHECK(sym_exp(lie_log(x), Exponents::kAllowRational) == x);
  }
}

TEST_CASE("log_c specialisations") {
  const int n = 10;
  std::mt19937_64 rng(8);
  const auto x = one(n) + random_rational(rng, n);
  const auto y = one(n) + random_rational(rng, n);
  CHECK(log_c(x, LogCWeights({Rational(1)})) == log_series(x));
  CHECK(log_c(x, LogCWeights::mobius(n)) == lie_log(x));
  const LogCWeights c({Rational(2), Rational(-1, 3), Rational(5)});
  CHECK(log_c(x * y, c) == log_c(x, c) + log_c(y, c));
}

TEST_CASE("hcfree closed forms") {
  const int n = 20;
  CHECK(hcfree(mono(n, 1, 0)) == mono(n, 1, 0) * invert(one(n) - mono(n, 1, 0)));
  CHECK(hcfree(mono(n, 1, 1)) == mono(n, 1, 1) * invert(one(n) - mono(n, 2, 0)));
}

TEST_CASE("hcfree counts necklaces") {
  const int n = 10;
  for (int d = 1; d <= 3; ++d) {
    const SignedSeries h = hcfree(mono(n, 1, 0, d));
    for (int q = 1; q <= n; ++q) CHECK(h.even(q) == Rational(necklaces(q, d)));
  }
  const SignedSeries h2 = hcfree(mono(n, 1, 0, 2));
  CHECK(h2.even(1) == 2);
  CHECK(h2.even(2) == 3);
  CHECK(h2.even(3) == 4);
  CHECK(h2.even(4) == 6);
  CHECK(h2.even(5) == 8);
}

TEST_CASE("hcfree: sum rule, logarithm law, integrality") {
  std::mt19937_64 rng(99);
  const int n = 10;
  for (int i = 0; i < 50; ++i) {
    const auto v1 = random_positive(rng, n, 2);
    const auto v2 = random_positive(rng, n, 2);
    const auto lhs = hcfree(v1 + v2);
    CHECK(lhs == hcfree(v1) + hcfree(v2) + hcfree(v1 * v2 * invert((one(n) - v1) * (one(n) - v2))));
    CHECK(lhs.has_integer_coefficients());
    CHECK(lhs.has_nonnegative_coefficients());
    // (1 - V1)(1 - V2) = 1 - V3
    const auto v3 = one(n) - (one(n) - v1) * (one(n) - v2);
    CHECK(hcfree(v1) + hcfree(v2) == hcfree(v3));
  }
}

TEST_CASE("Log_c forms commute with substitute_power") {
  std::mt19937_64 rng(4);
  const int n = 12;
  for (int i = 0; i < 10; ++i) {
    const auto v = random_positive(rng, n, 3);
    for (int k = 1; k <= 3; ++k) {
      CHECK(hcfree(substitute_power(v, k)) == substitute_power(hcfree(v), k));
      CHECK(lie_log(substitute_power(one(n) + v, k)) == substitute_power(lie_log(one(n) + v), k));
    }
  }
}

TEST_CASE("hcfree preconditions") {
  CHECK_THROWS_AS(hcfree(one(5)), DomainError);
  CHECK_THROWS_AS(lie_log(mono(5, 1, 0)), DomainError);
}

TEST_CASE("free products add cyclic homology") {
  const int n = 8;
  // T(2z) = T(z) * T(z): HC_0 = hcfree(z) + hcfree(z) + hcfree((A-1)(B-1))
  const SignedSeries a = invert(one(n) - mono(n, 1, 0));
  const TriSeries hc_a = tri_from_signed(hcfree(mono(n, 1, 0)));
  CHECK(free_product_hc(hc_a, hc_a, a, a) == tri_from_signed(hcfree(mono(n, 1, 0, 2))));
}
