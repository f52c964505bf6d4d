#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "cychom/linalg.hpp"
#include "cychom/rewriting.hpp"
#include "cychom/series.hpp"

namespace cychom {

/// u_1 ⊗ ... ⊗ u_m over normal words of positive weight.
using Tensor = std::vector<NormalBasis::Id>;

struct TensorHash {
  std::size_t operator()(const Tensor& t) const noexcept;
};

/// Tensors of one weight, natural parity and fine grading, grouped by length.
struct Block {
  int q = 0;
  int parity = 0;
  std::vector<long> key;
  /// tensors[m] lists the length-m tensors, m = 0..max_len (entry 0 is empty for q > 0).
  std::vector<std::vector<Tensor>> tensors;
  std::vector<std::unordered_map<Tensor, std::uint32_t, TensorHash>> index;

  std::size_t dim(int m) const { return m < static_cast<int>(tensors.size()) ? tensors[m].size() : 0; }
};

/// Bases of (I^{⊗m})_q for 1 <= q <= N and m <= min(q, max_len), split into blocks
/// that every map of the double complex preserves.
struct GradedBasis {
  int trunc = 0;
  int max_len = 0;
  std::vector<Block> blocks;
};

GradedBasis build_blocks(const NormalBasis& basis, int trunc, int max_len);

/// The maps of the double complex on one block. Entry m acts on length-m tensors.
struct ChainMaps {
  std::vector<SparseMatrix> b;       ///< Hochschild boundary, length m -> m-1
  std::vector<SparseMatrix> bprime;  ///< bar boundary, length m -> m-1
  std::vector<SparseMatrix> t;       ///< signed cyclic rotation, length m -> m
};

/// Assembles b, b' and t. With `check` set, verifies b∘b = 0, b'∘b' = 0,
/// b∘(1-t) = (1-t)∘b' and t^m = 1 exactly and throws InvariantViolation on failure.
/// Returns the number of identities verified through `checked`.
ChainMaps assemble_maps(const NormalBasis& basis, const Block& block, bool check, std::size_t* checked = nullptr);

struct OracleChecks {
  std::size_t blocks = 0;
  std::size_t identities = 0;  ///< exact matrix identities verified
  bool norm_map_agrees = true;
  bool hc0_matches_direct = true;
  bool hh_hc_consistent = true;  ///< HH = 1 + (1 + xy) HC slotwise
  std::optional<TriKey> hh_hc_first_violation;
  bool used_bignum = false;
};

/// Exact homology dimensions for q <= N and n <= max_hdeg.
struct HomologyTable {
  std::string presentation_hash;
  int trunc = 0;
  int max_hdeg = 0;
  std::map<TriKey, long> hh;  ///< nonzero dimensions only
  std::map<TriKey, long> hc;
  OracleChecks checks;

  long hh_dim(int n, int q, int sign) const;
  long hc_dim(int n, int q, int sign) const;
  TriSeries hh_series() const;
  TriSeries hc_series() const;
};

/// Runs the complexes for a system completed at least to weight `trunc`.
/// max_hdeg < 0 means max_hdeg = trunc.
HomologyTable run_oracle(const RewritingSystem& rs, int trunc, int max_hdeg = -1, const std::string& hash = {});

nlohmann::json to_json(const HomologyTable& t);
HomologyTable homology_table_from_json(const nlohmann::json& j);
std::string render_table(const HomologyTable& t);

enum class HomologyKind { kHochschild, kCyclic };

struct SlotReport {
  bool equal = true;
  std::optional<TriKey> first_discrepancy;
  Rational expected;
  Rational computed;
  std::size_t slots_compared = 0;
};

/// Compares the table with a predicted series on every slot n <= max_hdeg, q <= min(N, trunc).
SlotReport verify_against(const HomologyTable& table, const TriSeries& predicted, HomologyKind kind);

struct KoszulReport {
  SlotReport hh;  ///< Hochschild remap (n,q,e) -> (q-n,q,e)
  SlotReport hc;  ///< cyclic remap (n,q,e) -> (q-n-1,q,e+1)
  bool ok() const { return hh.equal && hc.equal; }
};

/// Checks both duality remaps between the tables of a Koszul pair on the slots
/// where both sides lie within the computed range.
KoszulReport koszul_check(const HomologyTable& a, const HomologyTable& a_dual);
KoszulReport koszul_check(const RewritingSystem& a, const RewritingSystem& a_dual, int trunc);

}  // namespace cychom
