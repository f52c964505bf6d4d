#pragma once

#include <cstdint>
#include <vector>

#include "cychom/rational.hpp"

namespace cychom {

/// Sparse vector: (index, value) pairs with strictly increasing indices and no zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// Adds c * v into the accumulator, keeping it sorted and zero-free.
void axpy(SparseVector& acc, const Rational& c, const SparseVector& v);

/// Builds a SparseVector from unsorted (index, value) contributions.
SparseVector collect(std::vector<std::pair<std::uint32_t, Rational>> entries);

/// Column-oriented sparse matrix: column j holds the image of source basis vector j.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<SparseVector> cols;

  std::size_t ncols() const { return cols.size(); }
  /// this * other, with other.rows == ncols().
  SparseMatrix compose(const SparseMatrix& other) const;
  bool is_zero() const;
};

/// Exact rank of the span of `vectors`.
///
/// Rows are scaled to primitive integer vectors and reduced by fraction-free
/// elimination (cross-multiplication followed by content removal). Machine
/// integers are used until an operation would overflow; the computation then
/// restarts on arbitrary-precision integers.
std::size_t rank(const std::vector<SparseVector>& vectors);

/// Statistics of the most recent rank() call on this thread (for diagnostics/tests).
struct RankStats {
  bool used_bignum = false;
  std::size_t fill = 0;  ///< total stored entries in the final echelon form
};
const RankStats& last_rank_stats();

}  // namespace cychom
