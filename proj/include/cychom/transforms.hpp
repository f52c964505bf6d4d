#pragma once

#include <vector>

#include "cychom/series.hpp"

namespace cychom {

/// Moebius function mu(k) for 0 <= k <= n (entry 0 unused), by sieve.
std::vector<int> mobius_table(int n);
/// Euler phi(k) for 0 <= k <= n (entry 0 unused), by sieve.
std::vector<long> totient_table(int n);

/// Weights c_k (k >= 1) of a generalised logarithm; c_1 must be nonzero.
class LogCWeights {
 public:
  /// c[0] is c_1, c[1] is c_2, ...
  explicit LogCWeights(std::vector<Rational> c);

  /// c_k = mu(k)/k, k = 1..n.
  static LogCWeights mobius(int n);
  /// c_k = phi(k)/k, k = 1..n.
  static LogCWeights totient(int n);

  /// c_k, zero beyond the stored range.
  Rational operator[](int k) const;
  int size() const { return static_cast<int>(c_.size()); }

 private:
  std::vector<Rational> c_;
};

/// sum X^k / k! for X with zero constant term.
SignedSeries exp_series(const SignedSeries& x);

/// -sum (1-X)^k / k for X with constant term 1.
SignedSeries log_series(const SignedSeries& x);

enum class Exponents {
  kIntegerOnly,
  kAllowRational,  ///< binomial-series extension to rational coefficients
};

/// Symmetric-algebra exponential: prod (1 + y z^k)^{b_k} / (1 - z^k)^{a_k}.
SignedSeries sym_exp(const SignedSeries& x, Exponents mode = Exponents::kIntegerOnly);

/// Inverse of sym_exp: sum mu(k)/k log X(z^k, (-1)^{k+1} y^k).
SignedSeries lie_log(const SignedSeries& x);

/// sum c_k log X(z^k, (-1)^{k+1} y^k).
SignedSeries log_c(const SignedSeries& x, const LogCWeights& c);

/// Series of HC_0 of the tensor algebra on V: -sum phi(k)/k log(1 - V(z^k, (-1)^{k+1} y^k)).
SignedSeries hcfree(const SignedSeries& v);

/// Cyclic homology of a free product from the factors' cyclic homology and Hilbert series.
/// Positive homological degrees add; degree zero gains hcfree((A-1)(B-1)).
TriSeries free_product_hc(const TriSeries& hc_a, const TriSeries& hc_b, const SignedSeries& a,
                          const SignedSeries& b);

}  // namespace cychom
