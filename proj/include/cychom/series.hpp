#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cychom/rational.hpp"

namespace cychom {

/// Coefficients of z^q and y*z^q at one weight.
struct CoefPair {
  Rational even;
  Rational odd;

  bool is_zero() const { return even == 0 && odd == 0; }
  friend bool operator==(const CoefPair&, const CoefPair&) = default;
};

/// Truncated element of Q[[z]][y]/(y^2-1).
///
/// Stores exactly two rationals per weight 0..trunc(). Every operation truncates
/// its result at the smaller of the operands' bounds.
class SignedSeries {
 public:
  explicit SignedSeries(int trunc = 0);

  static SignedSeries zero(int trunc) { return SignedSeries(trunc); }
  static SignedSeries one(int trunc);
  /// c * y^sign * z^weight (zero when weight > trunc).
  static SignedSeries monomial(int trunc, int weight, int sign, const Rational& c = 1);
  /// Dense construction; `coefs[q]` for q <= trunc, missing weights are zero.
  static SignedSeries from_pairs(int trunc, const std::vector<CoefPair>& coefs);

  int trunc() const { return static_cast<int>(coef_.size()) - 1; }
  const CoefPair& operator[](int q) const { return coef_.at(q); }
  const Rational& even(int q) const { return coef_.at(q).even; }
  const Rational& odd(int q) const { return coef_.at(q).odd; }
  CoefPair& at(int q) { return coef_.at(q); }

  /// Lowest weight with a nonzero coefficient, or trunc()+1 for the zero series.
  int order() const;
  bool is_zero() const { return order() > trunc(); }
  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;
  const CoefPair& constant() const { return coef_.front(); }

  SignedSeries truncated(int n) const;

  SignedSeries operator-() const;
  SignedSeries& operator+=(const SignedSeries& g);
  SignedSeries& operator-=(const SignedSeries& g);
  SignedSeries& operator*=(const Rational& c);

  friend SignedSeries operator+(SignedSeries f, const SignedSeries& g) { return f += g; }
  friend SignedSeries operator-(SignedSeries f, const SignedSeries& g) { return f -= g; }
  friend SignedSeries operator*(const SignedSeries& f, const SignedSeries& g);
  friend SignedSeries operator*(SignedSeries f, const Rational& c) { return f *= c; }
  friend SignedSeries operator*(const Rational& c, SignedSeries f) { return f *= c; }
  friend bool operator==(const SignedSeries&, const SignedSeries&) = default;

 private:
  std::vector<CoefPair> coef_;
};

/// Inverse of a series with constant term exactly 1 (Neumann series).
SignedSeries invert(const SignedSeries& f);

/// f^k for any integer k; negative k requires constant term 1.
SignedSeries power(const SignedSeries& f, int k);

/// Substitution z -> z^k, y -> (-1)^(k+1) y^k.
SignedSeries substitute_power(const SignedSeries& f, int k);

/// sum_k phi[k] f^k for f with zero constant term; phi[0] is the constant.
SignedSeries compose(const std::vector<Rational>& phi, const SignedSeries& f);

/// Index of a coefficient in a three-variable series: x^n z^q y^sign.
struct TriKey {
  int n = 0;
  int q = 0;
  int sign = 0;

  friend auto operator<=>(const TriKey&, const TriKey&) = default;
};

/// Truncated element of Q[[x,z]][y]/(y^2-1).
///
/// Sparse; only nonzero coefficients are stored. Weight and homological degree are
/// both truncated at trunc(). Genuine homology series are "supported": n <= q on
/// every nonzero slot. Intermediate values (such as 1+xy) need not be.
class TriSeries {
 public:
  explicit TriSeries(int trunc = 0) : trunc_(trunc) {}

  static TriSeries one(int trunc) { return monomial(trunc, 0, 0, 0); }
  static TriSeries monomial(int trunc, int n, int q, int sign, const Rational& c = 1);
  /// Embeds f at homological degree n (multiplies by x^n).
  static TriSeries from_signed(const SignedSeries& f, int n = 0);

  int trunc() const { return trunc_; }
  Rational operator()(int n, int q, int sign) const;
  void set(int n, int q, int sign, const Rational& c);
  void add(int n, int q, int sign, const Rational& c);
  const std::map<TriKey, Rational>& terms() const { return coef_; }

  bool is_supported() const;
  bool is_zero() const { return coef_.empty(); }
  /// The x^n slice as a signed series.
  SignedSeries slice(int n) const;
  TriSeries truncated(int n) const;

  TriSeries operator-() const;
  TriSeries& operator+=(const TriSeries& g);
  TriSeries& operator-=(const TriSeries& g);
  TriSeries& operator*=(const Rational& c);

  friend TriSeries operator+(TriSeries f, const TriSeries& g) { return f += g; }
  friend TriSeries operator-(TriSeries f, const TriSeries& g) { return f -= g; }
  friend TriSeries operator*(const TriSeries& f, const TriSeries& g);
  friend TriSeries operator*(TriSeries f, const Rational& c) { return f *= c; }
  friend bool operator==(const TriSeries&, const TriSeries&) = default;

 private:
  int trunc_;
  std::map<TriKey, Rational> coef_;
};

TriSeries tri_from_signed(const SignedSeries& f);
TriSeries invert(const TriSeries& f);
TriSeries power(const TriSeries& f, int k);

/// "1 + 7*y*z + 18*z^2 - 1/2*y*z^3"; "0" for the zero series.
std::string render(const SignedSeries& f);
/// Terms ordered by (q, n, sign), monomials written y*x^n*z^q.
std::string render(const TriSeries& f);
/// Aligned human-readable table, one row per weight.
std::string render_table(const SignedSeries& f);
std::string render_table(const TriSeries& f);

}  // namespace cychom
