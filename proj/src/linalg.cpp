#include "cychom/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

namespace cychom {

void axpy(SparseVector& acc, const Rational& c, const SparseVector& v) {
  if (c == 0 || v.empty()) return;
  SparseVector out;
  out.reserve(acc.size() + v.size());
  auto a = acc.begin();
  auto b = v.begin();
  while (a != acc.end() || b != v.end()) {
    if (b == v.end() || (a != acc.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == acc.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational s = a->second + c * b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

SparseVector collect(std::vector<std::pair<std::uint32_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVector out;
  for (auto& [i, c] : entries) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += c;
      if (out.back().second == 0) out.pop_back();
    } else if (c != 0) {
      out.emplace_back(i, std::move(c));
    }
  }
  return out;
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& other) const {
  SparseMatrix out;
  out.rows = rows;
  out.cols.resize(other.cols.size());
  for (std::size_t j = 0; j < other.cols.size(); ++j) {
    std::vector<std::pair<std::uint32_t, Rational>> entries;
    for (const auto& [k, c] : other.cols[j]) {
      for (const auto& [i, d] : cols.at(k)) entries.emplace_back(i, c * d);
    }
    out.cols[j] = collect(std::move(entries));
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols.begin(), cols.end(), [](const SparseVector& c) { return c.empty(); });
}

namespace {

thread_local RankStats g_stats;

struct Overflow {};

// Arithmetic policies: machine integers report overflow, big integers never do.
struct SmallInt {
  using T = std::int64_t;
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T gcd(T a, T b) {
    if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
    return std::gcd(a, b);
  }
  static bool is_zero(T a) { return a == 0; }
  static T div(T a, T b) { return a / b; }
};

struct BigInt {
  using T = Integer;
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T gcd(const T& a, const T& b) {
    T g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static bool is_zero(const T& a) { return a == 0; }
  static T div(const T& a, const T& b) {
    T r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
};

template <class Ops>
using Row = std::vector<std::pair<std::uint32_t, typename Ops::T>>;

template <class Ops>
void remove_content(Row<Ops>& row) {
  typename Ops::T g = 0;
  for (const auto& e : row) {
    g = Ops::gcd(g, e.second);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& e : row) e.second = Ops::div(e.second, g);
}

// row <- (p_lead/g) * row - (r_lead/g) * pivot; the leading entries cancel.
template <class Ops>
void eliminate_lead(Row<Ops>& row, const Row<Ops>& pivot, Row<Ops>& scratch) {
  using T = typename Ops::T;
  const T g = Ops::gcd(pivot.front().second, row.front().second);
  const T mr = Ops::div(pivot.front().second, g);
  const T mp = Ops::div(row.front().second, g);
  scratch.clear();
  auto a = row.begin() + 1;
  auto b = pivot.begin() + 1;
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      scratch.emplace_back(a->first, Ops::mul(mr, a->second));
      ++a;
    } else if (a == row.end() || b->first < a->first) {
      scratch.emplace_back(b->first, Ops::sub(T(0), Ops::mul(mp, b->second)));
      ++b;
    } else {
      T v = Ops::sub(Ops::mul(mr, a->second), Ops::mul(mp, b->second));
      if (!Ops::is_zero(v)) scratch.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  row.swap(scratch);
  remove_content<Ops>(row);
}

template <class Ops>
std::size_t echelon_rank(std::vector<Row<Ops>> rows, std::size_t ncols, std::size_t& fill) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::int32_t> pivot_of(ncols, -1);
  std::vector<Row<Ops>> pivots;
  Row<Ops> scratch;
  for (auto& row : rows) {
    while (!row.empty()) {
      const std::int32_t p = pivot_of[row.front().first];
      if (p < 0) {
        pivot_of[row.front().first] = static_cast<std::int32_t>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      eliminate_lead<Ops>(row, pivots[p], scratch);
    }
  }
  fill = 0;
  for (const auto& p : pivots) fill += p.size();
  return pivots.size();
}

}  // namespace

std::size_t rank(const std::vector<SparseVector>& vectors) {
  g_stats = RankStats{};
  // Order columns by occurrence count so sparse columns are eliminated first.
  std::uint32_t max_col = 0;
  for (const auto& v : vectors) {
    if (!v.empty()) max_col = std::max(max_col, v.back().first);
  }
  const std::size_t ncols = vectors.empty() ? 0 : static_cast<std::size_t>(max_col) + 1;
  std::vector<std::uint32_t> count(ncols, 0);
  for (const auto& v : vectors) {
    for (const auto& e : v) ++count[e.first];
  }
  std::vector<std::uint32_t> perm(ncols);
  std::iota(perm.begin(), perm.end(), 0U);
  std::stable_sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) { return count[a] < count[b]; });
  std::vector<std::uint32_t> new_index(ncols);
  for (std::uint32_t i = 0; i < ncols; ++i) new_index[perm[i]] = i;

  // Primitive integer rows.
  std::vector<Row<BigInt>> big_rows;
  big_rows.reserve(vectors.size());
  bool fits = true;
  for (const auto& v : vectors) {
    if (v.empty()) continue;
    Integer den = 1;
    for (const auto& e : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.second.get_den_mpz_t());
    Row<BigInt> row;
    row.reserve(v.size());
    for (const auto& e : v) {
      Integer num = e.second.get_num() * (den / e.second.get_den());
      row.emplace_back(new_index[e.first], std::move(num));
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    remove_content<BigInt>(row);
    for (const auto& e : row) fits = fits && e.second.fits_slong_p();
    big_rows.push_back(std::move(row));
  }

  if (fits) {
    std::vector<Row<SmallInt>> small_rows;
    small_rows.reserve(big_rows.size());
    for (const auto& r : big_rows) {
      Row<SmallInt> s;
      s.reserve(r.size());
      for (const auto& e : r) s.emplace_back(e.first, e.second.get_si());
      small_rows.push_back(std::move(s));
    }
    try {
      return echelon_rank<SmallInt>(std::move(small_rows), ncols, g_stats.fill);
    } catch (const Overflow&) {
      // fall through to arbitrary precision
    }
  }
  g_stats.used_bignum = true;
  return echelon_rank<BigInt>(std::move(big_rows), ncols, g_stats.fill);
}

const RankStats& last_rank_stats() { return g_stats; }

}  // namespace cychom
