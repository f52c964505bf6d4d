#include "cychom/transforms.hpp"

#include "cychom/error.hpp"

namespace cychom {

std::vector<int> mobius_table(int n) {
  std::vector<int> mu(static_cast<std::size_t>(std::max(n, 1)) + 1, 1);
  std::vector<bool> composite(mu.size(), false);
  mu[0] = 0;
  for (int p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (int m = p; m <= n; m += p) {
      if (m > p) composite[m] = true;
      mu[m] = -mu[m];
    }
    for (long m = static_cast<long>(p) * p; m <= n; m += static_cast<long>(p) * p) mu[m] = 0;
  }
  return mu;
}

std::vector<long> totient_table(int n) {
  std::vector<long> phi(static_cast<std::size_t>(std::max(n, 1)) + 1);
  for (int k = 0; k <= n; ++k) phi[k] = k;
  for (int p = 2; p <= n; ++p) {
    if (phi[p] != p) continue;  // already reduced: not prime
    for (int m = p; m <= n; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

LogCWeights::LogCWeights(std::vector<Rational> c) : c_(std::move(c)) {
  if (c_.empty() || c_.front() == 0) throw DomainError("log_c: c_1 must be nonzero");
}

LogCWeights LogCWeights::mobius(int n) {
  auto mu = mobius_table(n);
  std::vector<Rational> c;
  for (int k = 1; k <= std::max(n, 1); ++k) c.emplace_back(mu[k], k);
  for (auto& r : c) r.canonicalize();
  return LogCWeights(std::move(c));
}

LogCWeights LogCWeights::totient(int n) {
  auto phi = totient_table(n);
  std::vector<Rational> c;
  for (int k = 1; k <= std::max(n, 1); ++k) c.emplace_back(phi[k], k);
  for (auto& r : c) r.canonicalize();
  return LogCWeights(std::move(c));
}

Rational LogCWeights::operator[](int k) const {
  if (k < 1 || k > size()) return 0;
  return c_[k - 1];
}

namespace {

void require_unit(const SignedSeries& x, const char* op) {
  if (x.constant().even != 1 || x.constant().odd != 0) {
    throw DomainError(std::string(op) + ": constant term must be 1");
  }
}

void require_augmented(const SignedSeries& x, const char* op) {
  if (!x.constant().is_zero()) throw DomainError(std::string(op) + ": constant term must be 0");
}

void require_integral(const SignedSeries& out, const char* op) {
  for (int q = 0; q <= out.trunc(); ++q) {
    if (!is_integer(out.even(q)) || !is_integer(out.odd(q))) {
      throw IntegralityError(std::string(op) + ": non-integer coefficient at weight " +
                             std::to_string(q) + " for integer input");
    }
  }
}

}  // namespace

SignedSeries exp_series(const SignedSeries& x) {
  require_augmented(x, "exp");
  std::vector<Rational> coeffs(static_cast<std::size_t>(x.trunc()) + 1);
  Rational f = 1;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) f /= static_cast<unsigned long>(k);
    coeffs[k] = f;
  }
  return compose(coeffs, x);
}

SignedSeries log_series(const SignedSeries& x) {
  require_unit(x, "log");
  // log X = -sum_{k>=1} (1-X)^k / k
  std::vector<Rational> coeffs(static_cast<std::size_t>(x.trunc()) + 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    coeffs[k] = Rational(-1, static_cast<unsigned long>(k));
  }
  return compose(coeffs, SignedSeries::one(x.trunc()) - x);
}

namespace {

// (1 + sign_y * z^k)^alpha written out with the generalised binomial series,
// where the base is either 1 + y z^k (odd) or 1 - z^k (even).
SignedSeries binomial_factor(int trunc, int k, bool odd, const Rational& alpha) {
  SignedSeries f(trunc);
  for (int j = 0; j * k <= trunc; ++j) {
    Rational c = binomial(alpha, j);
    if (c == 0) continue;
    if (odd) {
      // (y z^k)^j = y^(j mod 2) z^(kj)
      if (j % 2 == 0) {
        f.at(j * k).even = c;
      } else {
        f.at(j * k).odd = c;
      }
    } else {
      if (j % 2 == 1) c = -c;
      f.at(j * k).even = c;
    }
  }
  return f;
}

}  // namespace

SignedSeries sym_exp(const SignedSeries& x, Exponents mode) {
  require_augmented(x, "S");
  if (mode == Exponents::kIntegerOnly && !x.has_integer_coefficients()) {
    throw DomainError("S: rational coefficients need the binomial-series extension");
  }
  SignedSeries result = SignedSeries::one(x.trunc());
  for (int k = 1; k <= x.trunc(); ++k) {
    if (x.even(k) != 0) result = result * binomial_factor(x.trunc(), k, false, -x.even(k));
    if (x.odd(k) != 0) result = result * binomial_factor(x.trunc(), k, true, x.odd(k));
  }
  return result;
}

SignedSeries log_c(const SignedSeries& x, const LogCWeights& c) {
  require_unit(x, "log_c");
  SignedSeries result(x.trunc());
  // X(z^k, ...) - 1 has order >= k, so terms with k > trunc vanish.
  for (int k = 1; k <= x.trunc(); ++k) {
    const Rational ck = c[k];
    if (ck == 0) continue;
    result += log_series(substitute_power(x, k)) * ck;
  }
  return result;
}

SignedSeries lie_log(const SignedSeries& x) {
  require_unit(x, "Lie");
  SignedSeries out = log_c(x, LogCWeights::mobius(x.trunc()));
  if (x.has_integer_coefficients()) require_integral(out, "Lie");
  return out;
}

SignedSeries hcfree(const SignedSeries& v) {
  require_augmented(v, "hcfree");
  SignedSeries out = -log_c(SignedSeries::one(v.trunc()) - v, LogCWeights::totient(v.trunc()));
  if (v.has_integer_coefficients()) require_integral(out, "hcfree");
  if (v.has_integer_coefficients() && v.has_nonnegative_coefficients() &&
      !out.has_nonnegative_coefficients()) {
    throw IntegralityError("hcfree: negative coefficient for a nonnegative input");
  }
  return out;
}

TriSeries free_product_hc(const TriSeries& hc_a, const TriSeries& hc_b, const SignedSeries& a,
                          const SignedSeries& b) {
  require_unit(a, "free_product_hc");
  require_unit(b, "free_product_hc");
  const int trunc = std::min({hc_a.trunc(), hc_b.trunc(), a.trunc(), b.trunc()});
  const SignedSeries one = SignedSeries::one(trunc);
  TriSeries out = hc_a.truncated(trunc) + hc_b.truncated(trunc);
  out += tri_from_signed(hcfree((a.truncated(trunc) - one) * (b.truncated(trunc) - one)));
  return out;
}

}  // namespace cychom
