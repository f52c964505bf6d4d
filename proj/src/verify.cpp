#include "cychom/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "cychom/algebras.hpp"
#include "cychom/calculus.hpp"
#include "cychom/error.hpp"
#include "cychom/expr.hpp"
#include "cychom/oracle.hpp"
#include "cychom/transforms.hpp"
#include "cychom/words.hpp"

namespace cychom {

namespace {

std::string slot(const TriKey& k) {
  return "(n=" + std::to_string(k.n) + ", q=" + std::to_string(k.q) + ", e=" + std::to_string(k.sign) + ")";
}

// Appends a comparison line; returns whether the series agree.
bool expect_equal(CaseResult& r, const std::string& what, const SignedSeries& expected, const SignedSeries& computed) {
  const int t = std::min(expected.trunc(), computed.trunc());
  for (int q = 0; q <= t; ++q) {
    if (expected[q] != computed[q]) {
      r.details.push_back(what + ": MISMATCH at weight " + std::to_string(q) + ": expected " +
                          to_string(expected.even(q)) + " + " + to_string(expected.odd(q)) + "y, computed " +
                          to_string(computed.even(q)) + " + " + to_string(computed.odd(q)) + "y");
      return false;
    }
  }
  r.details.push_back(what + ": ok up to weight " + std::to_string(t) + "  [" + render(computed.truncated(t)) + "]");
  return true;
}

bool expect_equal(CaseResult& r, const std::string& what, const TriSeries& expected, const TriSeries& computed) {
  const int t = std::min(expected.trunc(), computed.trunc());
  const TriSeries a = expected.truncated(t);
  const TriSeries b = computed.truncated(t);
  if (a == b) {
    r.details.push_back(what + ": ok up to weight " + std::to_string(t) + "  [" + render(b) + "]");
    return true;
  }
  std::vector<TriKey> keys;
  for (const auto& [k, c] : a.terms()) keys.push_back(k);
  for (const auto& [k, c] : b.terms()) keys.push_back(k);
  std::sort(keys.begin(), keys.end(),
            [](const TriKey& x, const TriKey& y) { return std::tie(x.q, x.n, x.sign) < std::tie(y.q, y.n, y.sign); });
  for (const auto& k : keys) {
    if (a(k.n, k.q, k.sign) != b(k.n, k.q, k.sign)) {
      r.details.push_back(what + ": MISMATCH at " + slot(k) + ": expected " + to_string(a(k.n, k.q, k.sign)) +
                          ", computed " + to_string(b(k.n, k.q, k.sign)));
      break;
    }
  }
  return false;
}

bool expect_report(CaseResult& r, const std::string& what, const SlotReport& rep) {
  if (rep.equal) {
    r.details.push_back(what + ": ok on " + std::to_string(rep.slots_compared) + " slots");
    return true;
  }
  r.details.push_back(what + ": MISMATCH at " + slot(*rep.first_discrepancy) + ": expected " + to_string(rep.expected) +
                      ", computed " + to_string(rep.computed));
  return false;
}

bool expect_checks(CaseResult& r, const HomologyTable& t) {
  const auto& c = t.checks;
  std::ostringstream os;
  os << "complex checks: " << c.identities << " identities on " << c.blocks << " blocks, norm map "
     << (c.norm_map_agrees ? "ok" : "FAIL") << ", HC_0 vs commutator quotient " << (c.hc0_matches_direct ? "ok" : "FAIL")
     << ", HH = 1 + (1+xy)HC " << (c.hh_hc_consistent ? "ok" : "FAIL at " + slot(*c.hh_hc_first_violation));
  r.details.push_back(os.str());
  return c.norm_map_agrees && c.hc0_matches_direct && c.hh_hc_consistent;
}

HomologyTable oracle_of(const Presentation& p, int n, int max_hdeg = -1) {
  return run_oracle(complete(p), n, max_hdeg);
}

SignedSeries lin(int trunc, long even1, long odd1, long even2) {
  SignedSeries s(trunc);
  s.at(1) = CoefPair{even1, odd1};
  if (trunc >= 2) s.at(2).even = even2;
  return s;
}

SignedSeries random_series(std::mt19937_64& rng, int trunc, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  SignedSeries s(trunc);
  for (int q = 1; q <= trunc; ++q) s.at(q) = CoefPair{d(rng), d(rng)};
  return s;
}

TriSeries z_pow_over(int trunc, int n, int q, int sign, const TriSeries& den) {
  return TriSeries::monomial(trunc, n, q, sign) * invert(den);
}

// ---------------------------------------------------------------- cases

bool final_example(CaseResult& r, std::uint64_t) {
  const auto v = std::get<SignedSeries>(evaluate("hcfree(7*y*z - 3*z^2)", 5));
  const SignedSeries expected = SignedSeries::from_pairs(5, {{0, 0}, {0, 7}, {18, 0}, {0, 98}, {465, 0}, {0, 2401}});
  bool ok = expect_equal(r, "hcfree(7yz-3z^2)", expected, v);
  TriSeries rhc(5);
  rhc.set(0, 1, 0, 7);
  rhc.set(0, 2, 0, 3);
  rhc.set(1, 2, 1, 21);
  rhc.set(2, 3, 0, 98);
  rhc.set(3, 4, 1, 465);
  rhc.set(4, 5, 0, 2401);
  ok &= expect_equal(r, "polynomial_generic(7,3,1,3)", rhc, predict(Preset{"polynomial_generic", {7, 3, 1, 3}, ""}, 5));
  return ok;
}

bool hcfree_z(CaseResult& r, std::uint64_t) {
  const int n = 20;
  const SignedSeries z = SignedSeries::monomial(n, 1, 0);
  return expect_equal(r, "hcfree(z) = z/(1-z)", z * invert(SignedSeries::one(n) - z), hcfree(z));
}

bool hcfree_yz(CaseResult& r, std::uint64_t) {
  const int n = 20;
  const SignedSeries yz = SignedSeries::monomial(n, 1, 1);
  return expect_equal(r, "hcfree(yz) = yz/(1-z^2)", yz * invert(SignedSeries::one(n) - SignedSeries::monomial(n, 2, 0)),
                      hcfree(yz));
}

bool serre_d2(CaseResult& r, std::uint64_t) {
  const int n = 14;
  const auto mu = mobius_table(n);
  SignedSeries witt(n);
  for (int q = 1; q <= n; ++q) {
    Integer s = 0;
    for (int j = 1; j <= q; ++j) {
      if (q % j == 0) s += mu[q / j] * (Integer(1) << j);
    }
    witt.at(q).even = Rational(s) / q;
  }
  const SignedSeries free2 = invert(SignedSeries::one(n) - SignedSeries::monomial(n, 1, 0, 2));
  return expect_equal(r, "lie(1/(1-2z)) vs necklace formula", witt, lie_log(free2));
}

bool hkr_n2(CaseResult& r, std::uint64_t) {
  const HomologyTable t = oracle_of(algebras::polynomial_ring(2, 5), 5);
  bool ok = expect_report(r, "HH(k[x1,x2]) vs (1+yxz)^2/(1-z)^2", verify_against(t, hkr(2, 5), HomologyKind::kHochschild));
  ok &= expect_equal(r, "hkr(2) = hkr(1)^2", tensor_hh(hkr(1, 5), hkr(1, 5)), hkr(2, 5));
  return expect_checks(r, t) && ok;
}

bool exterior_n2(CaseResult& r, std::uint64_t) {
  const HomologyTable t = oracle_of(algebras::exterior_algebra(2, 5), 5);
  bool ok = expect_report(r, "HH(exterior on 2 odd) vs (1+yz)^2/(1-xz)^2",
                          verify_against(t, exterior_hh(2, 5), HomologyKind::kHochschild));
  ok &= expect_equal(r, "exterior(2) = HH-dual of hkr(2)", koszul_dual(hkr(2, 5), DualityRemap::kHochschild),
                     exterior_hh(2, 5));
  return expect_checks(r, t) && ok;
}

bool koszul_pair(CaseResult& r, const Presentation& a, const Presentation& d, int n) {
  const HomologyTable ta = oracle_of(a, n);
  const HomologyTable td = oracle_of(d, n);
  const KoszulReport k = koszul_check(ta, td);
  bool ok = expect_report(r, "HH remap (n,q,e) -> (q-n,q,e)", k.hh);
  ok &= expect_report(r, "HC remap (n,q,e) -> (q-n-1,q,e+1)", k.hc);
  ok &= expect_equal(r, "series-level HH remap", koszul_dual(ta.hh_series(), DualityRemap::kHochschild), td.hh_series());
  ok &= expect_equal(r, "series-level HC remap", koszul_dual(ta.hc_series(), DualityRemap::kCyclic), td.hc_series());
  const bool checks_a = expect_checks(r, ta);
  const bool checks_d = expect_checks(r, td);
  return checks_a && checks_d && ok;
}

bool koszul_poly_exterior(CaseResult& r, std::uint64_t) {
  return koszul_pair(r, algebras::polynomial_ring(2, 5), algebras::exterior_algebra(2, 5), 5);
}

bool koszul_1var(CaseResult& r, std::uint64_t) {
  return koszul_pair(r, algebras::polynomial_ring(1, 6), algebras::exterior_algebra(1, 6), 6);
}

bool freeset_x1x2(CaseResult& r, std::uint64_t) {
  const int n = 6;
  const HomologyTable t = oracle_of(algebras::monomial_quotient(2, 0, {{"T1", "T2"}}, n), n);
  bool ok = true;
  for (int h = 1; h <= 4; ++h) {
    ok &= expect_equal(r, "HC_" + std::to_string(h) + " = 0", SignedSeries(n), t.hc_series().slice(h));
  }
  ok &= expect_equal(r, "HC_0 = hcfree(2z - z^2)", hcfree(lin(n, 2, 0, -1)), t.hc_series().slice(0));
  const TriSeries predicted = freeset_hc(SignedSeries::monomial(n, 1, 0, 2), SignedSeries::monomial(n, 2, 0), SignedSeries(n));
  ok &= expect_report(r, "freeset prediction", verify_against(t, predicted, HomologyKind::kCyclic));
  return expect_checks(r, t) && ok;
}

bool symmetric_form_abc(CaseResult& r, std::uint64_t) {
  const int n = 6;
  const HomologyTable t = oracle_of(algebras::symmetric_witness(n), n);
  const TriSeries hc = t.hc_series();
  bool ok = expect_equal(r, "HC_1 = yz^2", SignedSeries::monomial(n, 2, 1), hc.slice(1));
  ok &= expect_equal(r, "HC_0 = z^2 + hcfree(3zy - z^2)", SignedSeries::monomial(n, 2, 0) + hcfree(lin(n, 0, 3, -1)),
                     hc.slice(0));
  for (int h = 2; h <= n; ++h) ok &= expect_equal(r, "HC_" + std::to_string(h) + " = 0", SignedSeries(n), hc.slice(h));
  ok &= expect_report(r, "generic_symmetric(3) prediction",
                      verify_against(t, predict(Preset{"generic_symmetric", {3}, ""}, n), HomologyKind::kCyclic));
  const TriSeries fs = freeset_hc(SignedSeries::monomial(n, 1, 1, 3), SignedSeries::monomial(n, 2, 0),
                                  SignedSeries::monomial(n, 2, 1));
  ok &= expect_report(r, "strongly free set prediction with HC_1 = yz^2", verify_against(t, fs, HomologyKind::kCyclic));
  return expect_checks(r, t) && ok;
}

bool exceptional_case(CaseResult& r, const std::string& variant, int nvars) {
  const int n = 5;
  const HomologyTable t = oracle_of(algebras::exceptional(variant, nvars, n), n);
  bool ok = expect_report(r, "HC(" + variant + ", n=" + std::to_string(nvars) + ") vs closed formula",
                          verify_against(t, predict(Preset{"exceptional", {nvars}, variant}, n), HomologyKind::kCyclic));
  return expect_checks(r, t) && ok;
}

bool b0_n2_proof(CaseResult& r, std::uint64_t) {
  const int n = 6;
  const TriSeries one = TriSeries::one(n);
  const TriSeries num = TriSeries::monomial(n, 0, 1, 0, 2) - TriSeries::monomial(n, 0, 2, 0) + TriSeries::monomial(n, 1, 2, 1);
  const TriSeries closed = num * invert(power(one - TriSeries::monomial(n, 0, 1, 0), 2));
  bool ok = expect_equal(r, "(2z - z^2 + xyz^2)/(1-z)^2 vs B0(2)", closed, predict(Preset{"exceptional", {2}, "B0"}, n));
  ok &= expect_equal(r, "hh_from_hc(B0(2)) = hkr(2)", hkr(2, n), hh_from_hc(predict(Preset{"exceptional", {2}, "B0"}, n)));
  ok &= expect_equal(r, "hc_from_hh(hkr(2)) = B0(2)", closed, hc_from_hh(hkr(2, n)));
  return ok;
}

bool b1_n2_proof(CaseResult& r, std::uint64_t) {
  const int n = 6;
  const TriSeries one = TriSeries::one(n);
  const TriSeries d = invert(one - TriSeries::monomial(n, 0, 2, 0));
  const TriSeries d2 = d * d;
  // z^2/(1-z^2)^2 + 2yz/(1-z^2) + yxz^2/(1-z^2)^2, the n = 2 closed form
  const TriSeries n2 = TriSeries::monomial(n, 0, 2, 0) * d2 + TriSeries::monomial(n, 0, 1, 1, 2) * d +
                       TriSeries::monomial(n, 1, 2, 1) * d2;
  bool ok = expect_equal(r, "n = 2 closed form vs B1(2)", n2, predict(Preset{"exceptional", {2}, "B1"}, n));
  // the dual side: HH(k[a]/(a^2))^2 and its cyclic part
  const TriSeries xy = one + TriSeries::monomial(n, 1, 0, 1);
  const TriSeries e = invert(one - TriSeries::monomial(n, 2, 2, 0));
  const TriSeries hh_dual = one + xy * xy * TriSeries::monomial(n, 0, 2, 0) * e * e + xy * TriSeries::monomial(n, 0, 1, 0, 2) * e;
  const TriSeries hh_a = one + xy * TriSeries::monomial(n, 0, 1, 0) * e;
  ok &= expect_equal(r, "HH(B1!) = HH(k[a]/(a^2))^2", hh_dual, tensor_hh(hh_a, hh_a));
  const TriSeries hc_dual = xy * TriSeries::monomial(n, 0, 2, 0) * e * e + TriSeries::monomial(n, 0, 1, 0, 2) * e;
  ok &= expect_equal(r, "HC(B1!) from HH(B1!)", hc_dual, hc_from_hh(hh_dual));
  ok &= expect_equal(r, "cyclic remap of HC(B1!) = B1(2)", n2, koszul_dual(hc_dual, DualityRemap::kCyclic));
  return ok;
}

bool a0_dual(CaseResult& r, std::uint64_t) {
  const int n = 9;
  const TriSeries one = TriSeries::one(n);
  const TriSeries a0 = z_pow_over(n, 0, 1, 0, one - TriSeries::monomial(n, 2, 2, 0));
  const TriSeries free_odd = tri_from_signed(hcfree(SignedSeries::monomial(n, 1, 1)));
  bool ok = expect_equal(r, "cyclic remap of z/(1-x^2z^2) = yz/(1-z^2)", free_odd, koszul_dual(a0, DualityRemap::kCyclic));
  ok &= expect_equal(r, "remap is an involution", a0, koszul_dual(koszul_dual(a0, DualityRemap::kCyclic), DualityRemap::kCyclic));
  return ok;
}

bool free_2gen(CaseResult& r, std::uint64_t) {
  const int n = 6;
  const HomologyTable t = oracle_of(algebras::free_algebra(2, 0, n), n, 4);
  bool ok = true;
  for (int h = 1; h <= 4; ++h) ok &= expect_equal(r, "HC_" + std::to_string(h) + " = 0", SignedSeries(n), t.hc_series().slice(h));
  ok &= expect_equal(r, "HC_0 = hcfree(2z)", hcfree(SignedSeries::monomial(n, 1, 0, 2)), t.hc_series().slice(0));
  for (int h = 2; h <= 4; ++h) ok &= expect_equal(r, "HH_" + std::to_string(h) + " = 0", SignedSeries(n), t.hh_series().slice(h));
  return expect_checks(r, t) && ok;
}

bool odd_ab_monomial(CaseResult& r, std::uint64_t) {
  const int n = 6;
  const RewritingSystem rs = complete(algebras::monomial_quotient(2, 1, {{"T1", "T2"}}, n));
  const SignedSeries expected = SignedSeries::from_pairs(n, {{0, 0}, {0, 2}, {0, 0}, {0, 2}, {0, 0}, {0, 2}, {0, 0}});
  return expect_equal(r, "I/[I,I] of k<a,b>/(ab), odd", expected, hc0_direct(rs, n));
}

bool necklaces_2gen(CaseResult& r, std::uint64_t) {
  const int n = 5;
  const RewritingSystem rs = complete(algebras::free_algebra(2, 0, n));
  const SignedSeries expected = SignedSeries::from_pairs(n, {{0, 0}, {2, 0}, {3, 0}, {4, 0}, {6, 0}, {8, 0}});
  bool ok = expect_equal(r, "I/[I,I] of the free algebra on 2 even", expected, hc0_direct(rs, n));
  ok &= expect_equal(r, "hcfree(2z)", expected, hcfree(SignedSeries::monomial(n, 1, 0, 2)));
  return ok;
}

bool strongly_free_t1t2(CaseResult& r, std::uint64_t) {
  const int n = 10;
  const Alphabet two = Alphabet::uniform(2, 0);
  const auto good = strongly_free_series_check(two, MonomialSet({{0, 1}}), n);
  bool ok = is_strongly_free_monomials(MonomialSet({{0, 1}})) && good.equal;
  r.details.push_back(std::string("{T1T2}: criterion ") + (is_strongly_free_monomials(MonomialSet({{0, 1}})) ? "true" : "false") +
                      ", series " + (good.equal ? "equal" : "differ"));
  const auto bad = strongly_free_series_check(two, MonomialSet({{0, 0}}), n);
  ok &= !is_strongly_free_monomials(MonomialSet({{0, 0}})) && !bad.equal && bad.first_discrepancy == 3;
  r.details.push_back("{T1T1}: series first differ at weight " +
                      (bad.first_discrepancy ? std::to_string(*bad.first_discrepancy) : std::string("-")) + " (" +
                      to_string(bad.counted.even(3)) + " vs " + to_string(bad.predicted.even(3)) + ")");
  return ok;
}

bool sum_rule(CaseResult& r, std::uint64_t seed) {
  const int n = 10;
  std::mt19937_64 rng(seed);
  const SignedSeries one = SignedSeries::one(n);
  for (int i = 0; i < 50; ++i) {
    const SignedSeries v1 = random_series(rng, n, -2, 3);
    const SignedSeries v2 = random_series(rng, n, -2, 3);
    const SignedSeries lhs = hcfree(v1 + v2);
    const SignedSeries rhs = hcfree(v1) + hcfree(v2) + hcfree(v1 * v2 * invert((one - v1) * (one - v2)));
    if (lhs != rhs) return expect_equal(r, "sum rule, pair " + std::to_string(i), lhs, rhs);
  }
  r.details.push_back("hcfree(V1+V2) = hcfree(V1)+hcfree(V2)+hcfree(V1V2/((1-V1)(1-V2))): ok on 50 pairs");
  return true;
}

bool generic_quadratic_2(CaseResult& r, std::uint64_t) {
  const int n = 6;
  const TriSeries predicted = predict(Preset{"generic_quadratic", {2}, ""}, n);
  bool ok = expect_equal(r, "HC_0 = hcfree(2zy - z^2)", hcfree(lin(n, 0, 2, -1)), predicted.slice(0));
  // T1 T2 on two odd generators is strongly free, so it attains the generic series
  const HomologyTable t = oracle_of(algebras::monomial_quotient(2, 1, {{"T1", "T2"}}, n), n);
  ok &= expect_report(r, "witness k<T1,T2>/(T1T2), odd", verify_against(t, predicted, HomologyKind::kCyclic));
  return expect_checks(r, t) && ok;
}

struct Case {
  const char* name;
  const char* description;
  std::function<bool(CaseResult&, std::uint64_t)> run;
};

const std::vector<Case>& registry() {
  static const std::vector<Case> cases = {
      {"final-example", "hcfree(7yz-3z^2) to weight 5 and polynomial_generic(7,3,1,3)", final_example},
      {"hcfree-z", "hcfree(z) = z/(1-z) to weight 20", hcfree_z},
      {"hcfree-yz", "hcfree(yz) = yz/(1-z^2) to weight 20", hcfree_yz},
      {"serre-d2", "lie(1/(1-2z)) = (1/q) sum mu(q/j) 2^j", serre_d2},
      {"necklaces-2gen", "HC_0 of the free algebra on two even generators: 2,3,4,6,8", necklaces_2gen},
      {"odd-ab-monomial", "HC_0 of k<a,b>/(ab) with odd a,b = 2yz + 2yz^3 + 2yz^5", odd_ab_monomial},
      {"sum-rule", "hcfree(V1+V2) = hcfree(V1)+hcfree(V2)+hcfree(V1V2/((1-V1)(1-V2))) on random pairs", sum_rule},
      {"strongly-free-T1T2", "{T1T2} attains 1/(1-V+omega), {T1T1} does not", strongly_free_t1t2},
      {"free-2gen", "oracle: T(V) on two even generators has HC_n = 0 for n >= 1", free_2gen},
      {"freeset-x1x2", "oracle: k<x1,x2>/(x1x2) has HC_0 = hcfree(2z-z^2), HC_n = 0 for 1 <= n <= 4", freeset_x1x2},
      {"symmetric-form-abc", "oracle: k<a,b,c>/([a,b]+c^2), odd, has HC_1 = yz^2", symmetric_form_abc},
      {"generic-quadratic-2", "generic_quadratic(2) and the witness k<T1,T2>/(T1T2), odd", generic_quadratic_2},
      {"hkr-n2", "oracle: HH(k[x1,x2]) = (1+yxz)^2/(1-z)^2", hkr_n2},
      {"exterior-n2", "oracle: HH(exterior, 2 odd) = (1+yz)^2/(1-xz)^2", exterior_n2},
      {"koszul-poly-exterior", "oracle: HH/HC remaps between k[x1,x2] and its exterior dual", koszul_poly_exterior},
      {"koszul-1var", "oracle: HH/HC remaps between k[x] and k<e>/(e^2), e odd", koszul_1var},
      {"a0-dual", "cyclic remap sends z/(1-x^2z^2) to yz/(1-z^2)", a0_dual},
      {"b0-self-check", "B0 at n = 2: (2z-z^2+xyz^2)/(1-z)^2 and hh_from_hc gives hkr(2)", b0_n2_proof},
      {"b1-dual-chain", "B1 at n = 2 through HH(k[a]/(a^2))^2, hc_from_hh and the cyclic remap", b1_n2_proof},
      {"exceptional-A0-n2", "oracle: k<T1,T2>/(T1^2), even, vs z/(1-x^2z^2) + hcfree(z+z^2)",
       [](CaseResult& r, std::uint64_t) { return exceptional_case(r, "A0", 2); }},
      {"exceptional-A0-n3", "oracle: k<T1,T2,T3>/(T1^2), even",
       [](CaseResult& r, std::uint64_t) { return exceptional_case(r, "A0", 3); }},
      {"exceptional-A1-n2", "oracle: k<T1,T2>/(T1^2), odd, vs yz/(1-xz) + hcfree(yz+z^2)",
       [](CaseResult& r, std::uint64_t) { return exceptional_case(r, "A1", 2); }},
      {"exceptional-A1-n3", "oracle: k<T1,T2,T3>/(T1^2), odd",
       [](CaseResult& r, std::uint64_t) { return exceptional_case(r, "A1", 3); }},
      {"exceptional-B0-n2", "oracle: k<T1,T2>/([T1,T2]), even",
       [](CaseResult& r, std::uint64_t) { return exceptional_case(r, "B0", 2); }},
      {"exceptional-B0-n3", "oracle: k<T1,T2,T3>/([T1,T2]), even",
       [](CaseResult& r, std::uint64_t) { return exceptional_case(r, "B0", 3); }},
      {"exceptional-B1-n2", "oracle: k<T1,T2>/([T1,T2]), odd",
       [](CaseResult& r, std::uint64_t) { return exceptional_case(r, "B1", 2); }},
      {"exceptional-B1-n3", "oracle: k<T1,T2,T3>/([T1,T2]), odd",
       [](CaseResult& r, std::uint64_t) { return exceptional_case(r, "B1", 3); }},
  };
  return cases;
}

}  // namespace

std::vector<CaseInfo> verify_cases() {
  std::vector<CaseInfo> out;
  for (const auto& c : registry()) out.push_back({c.name, c.description});
  return out;
}

CaseResult run_case(const std::string& name, std::uint64_t seed) {
  for (const auto& c : registry()) {
    if (name != c.name) continue;
    CaseResult r;
    r.name = name;
    try {
      r.pass = c.run(r, seed);
    } catch (const std::exception& e) {
      r.pass = false;
      r.details.push_back(std::string("error: ") + e.what());
    }
    return r;
  }
  throw DomainError("unknown verify case '" + name + "' (see verify --list)");
}

}  // namespace cychom
