#pragma once

#include <string>
#include <vector>

#include "cychom/series.hpp"

namespace cychom {

/// Index transport between the homology series of A and of its Koszul dual.
enum class DualityRemap {
  kHochschild,  ///< (n, q, e) -> (q - n, q, e)
  kCyclic,      ///< (n, q, e) -> (q - n - 1, q, e + 1)
};

/// HH = 1 + (1 + xy) HC, slot by slot.
TriSeries hh_from_hc(const TriSeries& hc);

/// Solves HH = 1 + (1 + xy) HC for HC. Throws DivisibilityError naming the first
/// slot where the recursion leaves the support n < q.
TriSeries hc_from_hh(const TriSeries& hh);

TriSeries koszul_dual(const TriSeries& series, DualityRemap remap);

/// HH of a tensor product of commutative algebras (the caller vouches for commutativity).
TriSeries tensor_hh(const TriSeries& hh_a, const TriSeries& hh_b);

/// (1 + yxz)^n / (1 - z)^n: HH of the polynomial ring on n even generators of weight one.
TriSeries hkr(int n, int trunc);
/// (1 + yz)^n / (1 - xz)^n: HH of the exterior algebra on n odd generators.
TriSeries exterior_hh(int n, int trunc);

/// The diagonal slots (q, q, e) of an HH series.
SignedSeries diag_hh(const TriSeries& hh);

/// A / (1 + omega A): Hilbert series of A modulo a strongly free set with series omega.
SignedSeries quotient_series_strongly_free(const SignedSeries& a, const SignedSeries& omega);

/// 1 + z^weight y^sign A.
SignedSeries a_omega_series(const SignedSeries& a, int weight, int sign);

/// Cyclic homology of T(V) modulo a strongly free set with series omega:
/// HC_0 = y hc1 + hcfree(V - omega), HC_1 = hc1, HC_n = 0 for n >= 2.
TriSeries freeset_hc(const SignedSeries& v, const SignedSeries& omega, const SignedSeries& hc1);

/// Closed-form cyclic homology predictions.
struct Preset {
  std::string name;          ///< one of preset_names()
  std::vector<int> params;   ///< integer parameters, see preset_usage()
  std::string variant;       ///< A0 | A1 | B0 | B1 for "exceptional"
};

std::vector<std::string> preset_names();
/// One-line usage string such as "polynomial_generic n r j k".
std::string preset_usage(const std::string& name);

/// Evaluates a preset. Parameter constraints are hard preconditions (DomainError
/// naming the violated inequality).
TriSeries predict(const Preset& preset, int trunc);

}  // namespace cychom
