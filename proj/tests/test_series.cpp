#include <doctest.h>

#include <random>

#include "cychom/error.hpp"
#include "cychom/series.hpp"
#include "cychom/series_io.hpp"

using namespace cychom;

namespace {

SignedSeries z(int n) { return SignedSeries::monomial(n, 1, 0); }
SignedSeries yz(int n) { return SignedSeries::monomial(n, 1, 1); }
SignedSeries one(int n) { return SignedSeries::one(n); }

SignedSeries random_series(std::mt19937_64& rng, int n, bool unit) {
  std::uniform_int_distribution<int> d(-5, 5);
  SignedSeries s(n);
  for (int q = 1; q <= n; ++q) {
    Rational r(d(rng), 1 + (d(rng) + 5) % 3);
    r.canonicalize();
    s.at(q) = CoefPair{r, d(rng)};
  }
  if (unit) s.at(0) = CoefPair{1, 0};
  return s;
}

}  // namespace

TEST_CASE("geometric identities") {
  const int n = 10;
  SignedSeries geo(n);
  for (int q = 0; q <= n; ++q) geo.at(q).even = 1;
  CHECK((one(n) - z(n)) * geo == one(n));
  CHECK((one(n) + yz(n)) * (one(n) - yz(n)) == one(n) - SignedSeries::monomial(n, 2, 0));
  CHECK(yz(n) * yz(n) == SignedSeries::monomial(n, 2, 0));
}

TEST_CASE("invert") {
  const int n = 12;
  const SignedSeries g = invert(one(n) - SignedSeries::monomial(n, 1, 0, 2));
  for (int q = 0; q <= n; ++q) CHECK(g.even(q) == Rational(Integer(1) << q));
  // (1-z)^{-2}: coefficients q+1 by the binomial series
  const SignedSeries h = invert(one(n) - SignedSeries::monomial(n, 1, 0, 2) + SignedSeries::monomial(n, 2, 0));
  for (int q = 0; q <= n; ++q) {
    CHECK(h.even(q) == q + 1);
    CHECK(h.odd(q) == 0);
  }
  CHECK_THROWS_AS(invert(z(n)), DomainError);
  CHECK_THROWS_AS(invert(one(n) * Rational(2)), DomainError);
}

TEST_CASE("invert is a two-sided inverse on random units") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const SignedSeries f = random_series(rng, 10, true);
    CHECK(invert(f) * f == one(10));
  }
}

TEST_CASE("multiplication is commutative and associative") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_series(rng, 10, false);
    const auto b = random_series(rng, 10, false);
    const auto c = random_series(rng, 10, false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("mixed truncation takes the minimum") {
  const SignedSeries a = one(8) + z(8);
  const SignedSeries b = one(4) + z(4);
  CHECK((a + b).trunc() == 4);
  CHECK((a * b).trunc() == 4);
  CHECK((a * b).truncated(3) == (a.truncated(3) * b.truncated(3)));
}

TEST_CASE("substitute_power") {
  const int n = 10;
  CHECK(substitute_power(one(n) + yz(n), 2) == one(n) - SignedSeries::monomial(n, 2, 0));
  CHECK(substitute_power(one(n) + yz(n), 3) == one(n) + SignedSeries::monomial(n, 3, 1));
  const SignedSeries f = SignedSeries::monomial(n, 1, 0, 2) + SignedSeries::monomial(n, 2, 1, 3);
  CHECK(substitute_power(f, 2) == SignedSeries::monomial(n, 2, 0, 2) - SignedSeries::monomial(n, 4, 0, 3));
}

TEST_CASE("substitute_power is multiplicative and composes") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto f = random_series(rng, 12, false);
    const auto g = random_series(rng, 12, false);
    for (int k = 1; k <= 4; ++k) {
      CHECK(substitute_power(f * g, k) == substitute_power(f, k) * substitute_power(g, k));
      for (int j = 1; j <= 3; ++j) CHECK(substitute_power(substitute_power(f, j), k) == substitute_power(f, j * k));
    }
  }
}

TEST_CASE("compose") {
  const int n = 10;
  std::vector<Rational> geometric(n + 1, Rational(1));
  // 1/(1-yz) = (1+yz)/(1-z^2)
  CHECK(compose(geometric, yz(n)) == (one(n) + yz(n)) * invert(one(n) - SignedSeries::monomial(n, 2, 0)));
  CHECK(compose(geometric, SignedSeries(n)) == one(n));
  CHECK_THROWS_AS(compose(geometric, one(n)), DomainError);
}

TEST_CASE("power") {
  const int n = 8;
  const SignedSeries f = one(n) + yz(n);
  CHECK(power(f, 0) == one(n));
  CHECK(power(f, 3) == f * f * f);
  CHECK(power(f, -2) * power(f, 2) == one(n));
}

TEST_CASE("TriSeries arithmetic") {
  const int n = 6;
  const TriSeries t1 = TriSeries::one(n) + TriSeries::monomial(n, 1, 1, 1);
  TriSeries expected = TriSeries::one(n) + TriSeries::monomial(n, 1, 1, 1, 2) + TriSeries::monomial(n, 2, 2, 0);
  CHECK(t1 * t1 == expected);
  const TriSeries e = tri_from_signed(yz(n));
  CHECK(e(0, 1, 1) == 1);
  CHECK(e.terms().size() == 1);
  CHECK(invert(t1) * t1 == TriSeries::one(n));
  // (1+yxz)^2/(1-z)^2 to weight 2
  const TriSeries h = power(t1, 2) * power(invert(TriSeries::one(n) - TriSeries::monomial(n, 0, 1, 0)), 2);
  CHECK(h(0, 1, 0) == 2);
  CHECK(h(1, 1, 1) == 2);
  CHECK(h(0, 2, 0) == 3);
  CHECK(h(1, 2, 1) == 4);
  CHECK(h(2, 2, 0) == 1);
  CHECK(h.is_supported());
  CHECK_FALSE((TriSeries::one(n) + TriSeries::monomial(n, 1, 0, 1)).is_supported());
}

TEST_CASE("rendering is stable") {
  SignedSeries f(4);
  f.at(0).even = 1;
  f.at(1).odd = 7;
  f.at(2).even = 18;
  f.at(3).odd = Rational(-1, 2);
  CHECK(render(f) == "1 + 7*y*z + 18*z^2 - 1/2*y*z^3");
  CHECK(render(SignedSeries(3)) == "0");
  TriSeries t(4);
  t.set(1, 2, 1, 21);
  t.set(0, 1, 0, 7);
  CHECK(render(t) == "7*z + 21*y*x*z^2");
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto f = random_series(rng, 7, false);
    CHECK(signed_series_from_json(to_json(f)) == f);
    const TriSeries t = TriSeries::from_signed(f, 0) + TriSeries::from_signed(f, 1);
    CHECK(tri_series_from_json(to_json(t)) == t);
  }
  CHECK(to_json(one(2)).dump() == R"({"terms":[[0,"1","0"]],"trunc":2})");
}
