#include <doctest.h>

#include <random>

#include "cychom/algebras.hpp"
#include "cychom/calculus.hpp"
#include "cychom/error.hpp"
#include "cychom/oracle.hpp"
#include "cychom/transforms.hpp"

using namespace cychom;

namespace {

Presentation random_quadratic(std::mt19937_64& rng, int trunc) {
  std::uniform_int_distribution<int> gens(2, 3), rels(1, 2), parity(0, 1), coef(-2, 2);
  Presentation p = algebras::free_algebra(gens(rng), parity(rng), trunc);
  const int r = rels(rng);
  const Letter n = static_cast<Letter>(p.alphabet.size());
  while (static_cast<int>(p.relations.size()) < r) {
    Polynomial rel;
    for (Letter a = 0; a < n; ++a)
      for (Letter b = 0; b < n; ++b)
        if (int c = coef(rng)) rel.push_back(Term{{a, b}, c});
    if (!rel.empty()) p.relations.push_back(rel);
  }
  return p;
}

// Alternating sum of HH over n, split by the parity of the underlying tensors.
// The total complex has Euler characteristic 1 in weight 0 and 0 elsewhere.
void check_euler(const HomologyTable& t) {
  for (int q = 0; q <= t.trunc; ++q) {
    long chi[2] = {0, 0};
    for (int n = 0; n <= q; ++n)
      for (int e = 0; e < 2; ++e) chi[(e + n) % 2] += (n % 2 ? -1 : 1) * t.hh_dim(n, q, e);
    CHECK(chi[0] == (q == 0 ? 1 : 0));
    CHECK(chi[1] == 0);
  }
}

}  // namespace

TEST_CASE("blocks partition the tensor powers of the augmentation ideal") {
  for (const auto& p : {algebras::polynomial_ring(2, 5), algebras::symmetric_witness(5), algebras::free_algebra(2, 1, 5)}) {
    const RewritingSystem rs = complete(p);
    const NormalBasis nb(rs, 5);
    const SignedSeries ideal = nb.hilbert_series() - SignedSeries::one(5);
    const GradedBasis g = build_blocks(nb, 5, 4);
    for (int m = 1; m <= 4; ++m) {
      const SignedSeries pw = power(ideal, m);
      for (int q = 1; q <= 5; ++q) {
        long count[2] = {0, 0};
        for (const auto& b : g.blocks)
          if (b.q == q) count[b.parity] += static_cast<long>(b.dim(m));
        CHECK(pw.even(q) == count[0]);
        CHECK(pw.odd(q) == count[1]);
      }
    }
  }
}

TEST_CASE("chain maps satisfy the complex identities") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 8; ++i) {
    const RewritingSystem rs = complete(random_quadratic(rng, 5));
    const NormalBasis nb(rs, 5);
    const GradedBasis g = build_blocks(nb, 5, 6);
    std::size_t checked = 0;
    for (const auto& b : g.blocks) CHECK_NOTHROW(assemble_maps(nb, b, true, &checked));
    CHECK(checked > 0);
  }
}

TEST_CASE("free algebras") {
  const HomologyTable t = run_oracle(complete(algebras::free_algebra(2, 0, 6)), 6);
  const TriSeries hc = t.hc_series();
  CHECK(hc.slice(0) == hcfree(SignedSeries::monomial(6, 1, 0, 2)));
  for (int n = 1; n <= 6; ++n) CHECK(hc.slice(n).is_zero());
  for (int n = 2; n <= 6; ++n) CHECK(t.hh_series().slice(n).is_zero());
  CHECK(t.checks.hh_hc_consistent);
  CHECK(t.checks.norm_map_agrees);
  CHECK(t.checks.hc0_matches_direct);
  check_euler(t);
}

TEST_CASE("polynomial ring matches HKR") {
  const HomologyTable t = run_oracle(complete(algebras::polynomial_ring(2, 5)), 5);
  CHECK(verify_against(t, hkr(2, 5), HomologyKind::kHochschild).equal);
  CHECK(t.hc_series() == hc_from_hh(hkr(2, 5)));
  check_euler(t);
}

TEST_CASE("dual numbers") {
  // k[e]/(e^2), e even: HC = z/(1 - x^2 z^2)
  const HomologyTable t = run_oracle(complete(algebras::exceptional("A0", 1, 7)), 7);
  const TriSeries one = TriSeries::one(7);
  CHECK(t.hc_series() == TriSeries::monomial(7, 0, 1, 0) * invert(one - TriSeries::monomial(7, 2, 2, 0)));
  check_euler(t);
}

TEST_CASE("square-zero algebra matches polynomial_generic with r = 0") {
  // every quadric vanishes: k<x1,x2,x3>/(x_i x_j)
  std::vector<std::vector<std::string>> words;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) words.push_back({"x" + std::to_string(i), "x" + std::to_string(j)});
  const HomologyTable t = run_oracle(complete(algebras::monomial_quotient(3, 0, words, 5, "x")), 5);
  CHECK(verify_against(t, predict(Preset{"polynomial_generic", {3, 0, 1, 1}, ""}, 5), HomologyKind::kCyclic).equal);
  check_euler(t);
}

TEST_CASE("random quadratic algebras pass every internal check") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 8; ++i) {
    const HomologyTable t = run_oracle(complete(random_quadratic(rng, 5)), 5);
    CHECK(t.checks.norm_map_agrees);
    CHECK(t.checks.hc0_matches_direct);
    CHECK(t.checks.hh_hc_consistent);
    CHECK(t.hc_series().is_supported());
    check_euler(t);
  }
}

TEST_CASE("max_hdeg limits the table") {
  const HomologyTable full = run_oracle(complete(algebras::exterior_algebra(2, 5)), 5);
  const HomologyTable part = run_oracle(complete(algebras::exterior_algebra(2, 5)), 5, 2);
  CHECK(part.max_hdeg == 2);
  for (const auto& [k, d] : part.hh) {
    CHECK(k.n <= 2);
    CHECK(full.hh_dim(k.n, k.q, k.sign) == d);
  }
  for (const auto& [k, d] : part.hc) CHECK(full.hc_dim(k.n, k.q, k.sign) == d);
  CHECK(part.checks.hh_hc_consistent);
}

TEST_CASE("oracle preconditions") {
  Presentation p = algebras::polynomial_ring(2, 3);
  const RewritingSystem rs = complete(p);
  CHECK_THROWS_AS(run_oracle(rs, 5), DomainError);
}

TEST_CASE("comparison reports") {
  const HomologyTable t = run_oracle(complete(algebras::exceptional("A1", 2, 5)), 5);
  const TriSeries predicted = predict(Preset{"exceptional", {2}, "A1"}, 5);
  const SlotReport ok = verify_against(t, predicted, HomologyKind::kCyclic);
  CHECK(ok.equal);
  CHECK(ok.slots_compared > 0);
  TriSeries wrong = predicted;
  wrong.add(1, 3, 0, 1);
  const SlotReport bad = verify_against(t, wrong, HomologyKind::kCyclic);
  CHECK_FALSE(bad.equal);
  REQUIRE(bad.first_discrepancy.has_value());
  CHECK(bad.first_discrepancy->n == 1);
  CHECK(bad.first_discrepancy->q == 3);
  CHECK(bad.expected == wrong(1, 3, 0));
  CHECK(bad.computed == t.hc_dim(1, 3, 0));
}

TEST_CASE("Koszul pairs") {
  CHECK(koszul_check(complete(algebras::polynomial_ring(2, 5)), complete(algebras::exterior_algebra(2, 5)), 5).ok());
  CHECK(koszul_check(complete(algebras::polynomial_ring(1, 6)), complete(algebras::exterior_algebra(1, 6)), 6).ok());
  CHECK_FALSE(koszul_check(complete(algebras::polynomial_ring(2, 5)), complete(algebras::exterior_algebra(3, 5)), 5).ok());
}

TEST_CASE("table serialization") {
  const HomologyTable t = run_oracle(complete(algebras::symmetric_witness(4)), 4, -1, "abc");
  const auto j = to_json(t);
  CHECK(j.at("presentation_hash") == "abc");
  CHECK(j.at("N") == 4);
  const HomologyTable back = homology_table_from_json(j);
  CHECK(back.hh == t.hh);
  CHECK(back.hc == t.hc);
  CHECK(back.trunc == t.trunc);
  CHECK(back.max_hdeg == t.max_hdeg);
  CHECK(to_json(back) == j);
  CHECK_THROWS_AS(homology_table_from_json(nlohmann::json{{"N", 3}}), SchemaError);
  const std::string text = render_table(t);
  CHECK(text.find("HC") != std::string::npos);
  CHECK(text.find("checks") != std::string::npos);
}
