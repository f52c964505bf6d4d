#include <doctest.h>

#include <random>

#include "cychom/linalg.hpp"
#include "naive.hpp"

using namespace cychom;

namespace {

naive::Matrix dense(const std::vector<SparseVector>& vs, std::size_t cols) {
  naive::Matrix m;
  for (const auto& v : vs) {
    std::vector<Rational> row(cols);
    for (const auto& [i, c] : v) row[i] = c;
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<SparseVector> random_vectors(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range,
                                         double density) {
  std::uniform_int_distribution<int> v(-range, range);
  std::uniform_int_distribution<int> den(1, 4);
  std::bernoulli_distribution keep(density);
  std::vector<SparseVector> out;
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::pair<std::uint32_t, Rational>> e;
    for (std::uint32_t c = 0; c < cols; ++c) {
      if (!keep(rng)) continue;
      Rational x(v(rng), den(rng));
      x.canonicalize();
      e.emplace_back(c, x);
    }
    out.push_back(collect(std::move(e)));
  }
  return out;
}

}  // namespace

TEST_CASE("collect and axpy") {
  const SparseVector v = collect({{3, 1}, {1, 2}, {3, -1}, {0, Rational(1, 2)}});
  CHECK(v == SparseVector{{0, Rational(1, 2)}, {1, 2}});
  SparseVector acc = v;
  axpy(acc, -2, SparseVector{{1, 1}, {4, 1}});
  CHECK(acc == SparseVector{{0, Rational(1, 2)}, {4, -2}});
  axpy(acc, 0, SparseVector{{2, 1}});
  CHECK(acc.size() == 2);
}

TEST_CASE("matrix composition") {
  SparseMatrix a{2, {{{0, 1}}, {{0, 1}, {1, 1}}}};      // [[1,1],[0,1]]
  SparseMatrix b{2, {{{0, 1}, {1, -1}}, {{1, 1}}}};     // [[1,0],[-1,1]]
  const SparseMatrix ab = a.compose(b);
  CHECK(ab.cols[0] == SparseVector{{1, -1}});
  CHECK(ab.cols[1] == SparseVector{{0, 1}, {1, 1}});
  SparseMatrix n{2, {{{1, 1}}, {}}};
  CHECK(n.compose(n).is_zero());
  CHECK(!n.is_zero());
}

TEST_CASE("rank agrees with dense elimination") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dim(0, 12);
  for (int i = 0; i < 300; ++i) {
    const std::size_t rows = dim(rng), cols = dim(rng) + 1;
    const auto vs = random_vectors(rng, rows, cols, 3, i % 2 ? 0.3 : 0.8);
    CHECK(rank(vs) == naive::rank(dense(vs, cols)));
  }
}

TEST_CASE("small unimodular input stays on machine integers") {
  std::vector<SparseVector> rows;
  for (std::uint32_t i = 0; i < 6; ++i) rows.push_back(SparseVector{{i, 1}, {i + 1, -1}});
  CHECK(rank(rows) == 6);
  CHECK_FALSE(last_rank_stats().used_bignum);
}

TEST_CASE("low-rank products") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    // rows spanned by 3 random vectors
    const auto basis = random_vectors(rng, 3, 10, 5, 0.7);
    std::uniform_int_distribution<int> c(-4, 4);
    std::vector<SparseVector> rows;
    for (int r = 0; r < 9; ++r) {
      SparseVector acc;
      for (const auto& b : basis) axpy(acc, c(rng), b);
      rows.push_back(acc);
    }
    CHECK(rank(rows) == naive::rank(dense(rows, 10)));
    CHECK(rank(rows) <= 3);
  }
}

TEST_CASE("overflow falls back to bignums") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> big(-(1L << 40), 1L << 40);
  std::vector<SparseVector> rows;
  for (int r = 0; r < 8; ++r) {
    std::vector<std::pair<std::uint32_t, Rational>> e;
    for (std::uint32_t c = 0; c < 8; ++c) e.emplace_back(c, Rational(big(rng)));
    rows.push_back(collect(std::move(e)));
  }
  // a dependent row
  SparseVector dep = rows[0];
  axpy(dep, 7, rows[1]);
  rows.push_back(dep);
  CHECK(rank(rows) == naive::rank(dense(rows, 8)));
  CHECK(last_rank_stats().used_bignum);

  std::vector<SparseVector> huge{{{0, Rational(Integer("123456789012345678901234567890"))}, {1, 1}},
                                 {{1, Rational(1, 3)}}};
  CHECK(rank(huge) == 2);
  CHECK(last_rank_stats().used_bignum);
}

TEST_CASE("empty input") {
  CHECK(rank({}) == 0);
  CHECK(rank({SparseVector{}, SparseVector{}}) == 0);
}
