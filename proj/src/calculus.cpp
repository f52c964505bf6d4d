#include "cychom/calculus.hpp"

#include <algorithm>
#include <map>

#include "cychom/error.hpp"
#include "cychom/transforms.hpp"

namespace cychom {

TriSeries hh_from_hc(const TriSeries& hc) {
  for (const auto& [k, c] : hc.terms()) {
    if (k.n >= k.q) {
      throw DomainError("hh_from_hc: HC has a coefficient at n >= q (n=" + std::to_string(k.n) +
                        ", q=" + std::to_string(k.q) + ")");
    }
  }
  TriSeries hh = TriSeries::one(hc.trunc());
  for (const auto& [k, c] : hc.terms()) {
    hh.add(k.n, k.q, k.sign, c);
    hh.add(k.n + 1, k.q, k.sign + 1, c);
  }
  return hh;
}

TriSeries hc_from_hh(const TriSeries& hh) {
  if (hh(0, 0, 0) != 1 || hh(0, 0, 1) != 0) {
    throw DomainError("hc_from_hh: HH must have constant term 1");
  }
  const int trunc = hh.trunc();
  TriSeries hc(trunc);
  for (int q = 0; q <= trunc; ++q) {
    for (int n = 0; n <= trunc; ++n) {
      for (int sign = 0; sign < 2; ++sign) {
        Rational c = hh(n, q, sign);
        if (n == 0 && q == 0) c -= sign == 0 ? 1 : 0;
        if (n > 0) c -= hc(n - 1, q, sign ^ 1);
        if (c == 0) continue;
        if (n >= q) throw DivisibilityError(n, q, sign);
        hc.set(n, q, sign, c);
      }
    }
  }
  return hc;
}

TriSeries koszul_dual(const TriSeries& series, DualityRemap remap) {
  TriSeries out(series.trunc());
  for (const auto& [k, c] : series.terms()) {
    int n = 0;
    int sign = k.sign;
    if (remap == DualityRemap::kHochschild) {
      n = k.q - k.n;
    } else {
      n = k.q - k.n - 1;
      sign ^= 1;
    }
    if (n < 0) {
      throw DomainError("koszul_dual: slot (n=" + std::to_string(k.n) + ", q=" + std::to_string(k.q) +
                        ") lies outside the support of the remap");
    }
    out.set(n, k.q, sign, c);
  }
  return out;
}

TriSeries tensor_hh(const TriSeries& hh_a, const TriSeries& hh_b) { return hh_a * hh_b; }

TriSeries hkr(int n, int trunc) {
  if (n < 1) throw DomainError("hkr: n must be positive");
  TriSeries num = TriSeries::one(trunc) + TriSeries::monomial(trunc, 1, 1, 1);
  TriSeries den = TriSeries::one(trunc) - TriSeries::monomial(trunc, 0, 1, 0);
  return power(num, n) * power(invert(den), n);
}

TriSeries exterior_hh(int n, int trunc) {
  if (n < 1) throw DomainError("exterior_hh: n must be positive");
  TriSeries num = TriSeries::one(trunc) + TriSeries::monomial(trunc, 0, 1, 1);
  TriSeries den = TriSeries::one(trunc) - TriSeries::monomial(trunc, 1, 1, 0);
  return power(num, n) * power(invert(den), n);
}

SignedSeries diag_hh(const TriSeries& hh) {
  SignedSeries d(hh.trunc());
  for (const auto& [k, c] : hh.terms()) {
    if (k.n != k.q) continue;
    if (k.sign == 0) {
      d.at(k.q).even = c;
    } else {
      d.at(k.q).odd = c;
    }
  }
  return d;
}

SignedSeries quotient_series_strongly_free(const SignedSeries& a, const SignedSeries& omega) {
  if (a.constant().even != 1 || a.constant().odd != 0) {
    throw DomainError("quotient series: A must have constant term 1");
  }
  if (!omega.constant().is_zero()) throw DomainError("quotient series: omega must have zero constant term");
  return a * invert(SignedSeries::one(a.trunc()) + omega * a);
}

SignedSeries a_omega_series(const SignedSeries& a, int weight, int sign) {
  if (a.constant().even != 1 || a.constant().odd != 0) {
    throw DomainError("a_omega_series: A must have constant term 1");
  }
  if (weight < 1) throw DomainError("a_omega_series: omega must have positive weight");
  return SignedSeries::one(a.trunc()) + SignedSeries::monomial(a.trunc(), weight, sign) * a;
}

TriSeries freeset_hc(const SignedSeries& v, const SignedSeries& omega, const SignedSeries& hc1) {
  const int trunc = std::min({v.trunc(), omega.trunc(), hc1.trunc()});
  SignedSeries hc0 = SignedSeries::monomial(trunc, 0, 1) * hc1 + hcfree(v - omega);
  return TriSeries::from_signed(hc0.truncated(trunc), 0) + TriSeries::from_signed(hc1.truncated(trunc), 1);
}

// ---------------------------------------------------------------- presets

namespace {

struct PresetInfo {
  const char* name;
  const char* usage;
  std::size_t arity;
};

const PresetInfo kPresets[] = {
    {"generic_quadratic", "generic_quadratic n  (n >= 2 odd generators, one generic quadratic form)", 1},
    {"generic_symmetric", "generic_symmetric n  (n >= 3 odd generators, one generic symmetric form)", 1},
    {"generic_symmetric_many",
     "generic_symmetric_many n r j k  (r generic symmetric forms; r <= j*k, j+k+j*k <= n)", 4},
    {"polynomial_generic",
     "polynomial_generic n r j k  (k[x_1..x_n] modulo C(n+1,2)-r generic quadrics; r <= j*k, j+k+j*k <= n)",
     4},
    {"exceptional", "exceptional A0|A1|B0|B1 n  (T_1^2 or [T_1,T_2] in n even/odd generators)", 1},
};

const PresetInfo& find_preset(const std::string& name) {
  for (const auto& p : kPresets) {
    if (name == p.name) return p;
  }
  throw DomainError("unknown preset '" + name + "'");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("preset constraint violated: " + what);
}

SignedSeries lin(int trunc, const Rational& even1, const Rational& odd1, const Rational& even2) {
  SignedSeries s(trunc);
  if (trunc >= 1) s.at(1) = CoefPair{even1, odd1};
  if (trunc >= 2) s.at(2).even = even2;
  return s;
}

void check_many(int n, int r, int j, int k) {
  require(j >= 1 && k >= 1, "j >= 1 and k >= 1");
  require(r >= 0, "r >= 0");
  require(r <= j * k, "r <= j*k (r=" + std::to_string(r) + ", j*k=" + std::to_string(j * k) + ")");
  require(j + k + j * k <= n,
          "j+k+j*k <= n (j+k+j*k=" + std::to_string(j + k + j * k) + ", n=" + std::to_string(n) + ")");
}

TriSeries z_over(int trunc, int num_n, int num_q, int num_sign, const TriSeries& den) {
  return TriSeries::monomial(trunc, num_n, num_q, num_sign) * invert(den);
}

TriSeries exceptional(const std::string& variant, int n, int trunc) {
  const TriSeries one = TriSeries::one(trunc);
  if (variant == "A0" || variant == "A1") {
    require(n >= 1, "n >= 1");
    if (variant == "A0") {
      // z/(1 - x^2 z^2) + hcfree((n-1)z + (n-1)z^2)
      TriSeries head = z_over(trunc, 0, 1, 0, one - TriSeries::monomial(trunc, 2, 2, 0));
      return head + tri_from_signed(hcfree(lin(trunc, n - 1, 0, n - 1)));
    }
    // yz/(1 - xz) + hcfree((n-1)yz + (n-1)z^2)
    TriSeries head = z_over(trunc, 0, 1, 1, one - TriSeries::monomial(trunc, 1, 1, 0));
    return head + tri_from_signed(hcfree(lin(trunc, 0, n - 1, n - 1)));
  }
  if (variant == "B0") {
    require(n >= 2, "n >= 2");
    // (z^2 + yxz^2)/(1-z)^2 + hcfree(nz - z^2)
    TriSeries den = power(one - TriSeries::monomial(trunc, 0, 1, 0), 2);
    TriSeries num = TriSeries::monomial(trunc, 0, 2, 0) + TriSeries::monomial(trunc, 1, 2, 1);
    return num * invert(den) + tri_from_signed(hcfree(lin(trunc, n, 0, -1)));
  }
  if (variant == "B1") {
    require(n >= 2, "n >= 2");
    // (z^2 + yxz^2)/(1-z^2)^2 + hcfree(nyz - z^2); at n = 2 the hcfree term equals 2yz/(1-z^2).
    TriSeries den = power(one - TriSeries::monomial(trunc, 0, 2, 0), 2);
    TriSeries num = TriSeries::monomial(trunc, 0, 2, 0) + TriSeries::monomial(trunc, 1, 2, 1);
    return num * invert(den) + tri_from_signed(hcfree(lin(trunc, 0, n, -1)));
  }
  throw DomainError("exceptional: variant must be one of A0, A1, B0, B1");
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : kPresets) names.emplace_back(p.name);
  return names;
}

std::string preset_usage(const std::string& name) { return find_preset(name).usage; }

TriSeries predict(const Preset& preset, int trunc) {
  const PresetInfo& info = find_preset(preset.name);
  if (preset.params.size() != info.arity) {
    throw DomainError("preset " + preset.name + " expects " + std::to_string(info.arity) +
                      " integer parameter(s): " + info.usage);
  }
  const auto& p = preset.params;
  if (preset.name == "generic_quadratic") {
    require(p[0] >= 2, "n >= 2");
    return tri_from_signed(hcfree(lin(trunc, 0, p[0], -1)));
  }
  if (preset.name == "generic_symmetric" || preset.name == "generic_symmetric_many") {
    int n = p[0];
    int r = 1;
    if (preset.name == "generic_symmetric") {
      require(n >= 3, "n >= 3");
    } else {
      r = p[1];
      check_many(n, r, p[2], p[3]);
    }
    SignedSeries hc0 = SignedSeries::monomial(trunc, 2, 0, r) + hcfree(lin(trunc, 0, n, -r));
    return TriSeries::from_signed(hc0, 0) + TriSeries::monomial(trunc, 1, 2, 1, r);
  }
  if (preset.name == "polynomial_generic") {
    const int n = p[0], r = p[1];
    check_many(n, r, p[2], p[3]);
    // rz^2 + rxyz^2 + sum b_i x^(i-1) z^i + y sum a_i x^(i-1) z^i, hcfree(nzy - rz^2) = sum a_i z^i + y b_i z^i
    const SignedSeries h = hcfree(lin(trunc, 0, n, -r));
    TriSeries out = TriSeries::monomial(trunc, 0, 2, 0, r) + TriSeries::monomial(trunc, 1, 2, 1, r);
    for (int i = 1; i <= trunc; ++i) {
      out.add(i - 1, i, 0, h.odd(i));
      out.add(i - 1, i, 1, h.even(i));
    }
    return out;
  }
  // exceptional
  return exceptional(preset.variant, p[0], trunc);
}

}  // namespace cychom
