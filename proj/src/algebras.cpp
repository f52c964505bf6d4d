#include "cychom/algebras.hpp"

#include "cychom/error.hpp"

namespace cychom::algebras {

namespace {

Term term(std::vector<Letter> w, long c = 1) { return Term{std::move(w), Rational(c)}; }

}  // namespace

Presentation free_algebra(int n, int parity, int trunc, const std::string& prefix) {
  return Presentation::free(Alphabet::uniform(n, parity, prefix), trunc);
}

Presentation polynomial_ring(int n, int trunc) {
  Presentation p = free_algebra(n, 0, trunc, "x");
  for (Letter i = 0; i < static_cast<Letter>(n); ++i) {
    for (Letter j = i + 1; j < static_cast<Letter>(n); ++j) p.relations.push_back({term({j, i}), term({i, j}, -1)});
  }
  return p;
}

Presentation exterior_algebra(int n, int trunc) {
  Presentation p = free_algebra(n, 1, trunc, "a");
  for (Letter i = 0; i < static_cast<Letter>(n); ++i) {
    p.relations.push_back({term({i, i})});
    for (Letter j = i + 1; j < static_cast<Letter>(n); ++j) p.relations.push_back({term({j, i}), term({i, j})});
  }
  return p;
}

Presentation monomial_quotient(int n, int parity, const std::vector<std::vector<std::string>>& words, int trunc,
                               const std::string& prefix) {
  Presentation p = free_algebra(n, parity, trunc, prefix);
  for (const auto& w : words) {
    Word letters;
    for (const auto& name : w) letters.push_back(p.alphabet.index_of(name));
    p.relations.push_back({term(std::move(letters))});
  }
  return p;
}

Presentation symmetric_witness(int trunc) {
  Presentation p = Presentation::free(Alphabet({{"a", 1, 1}, {"b", 1, 1}, {"c", 1, 1}}), trunc);
  p.relations.push_back({term({0, 1}), term({1, 0}), term({2, 2})});
  return p;
}

Presentation exceptional(const std::string& variant, int n, int trunc) {
  if (variant == "A0" || variant == "A1") {
    if (n < 1) throw DomainError("exceptional " + variant + " needs n >= 1");
    Presentation p = free_algebra(n, variant == "A1" ? 1 : 0, trunc);
    p.relations.push_back({term({0, 0})});
    return p;
  }
  if (variant == "B0" || variant == "B1") {
    if (n < 2) throw DomainError("exceptional " + variant + " needs n >= 2");
    const bool odd = variant == "B1";
    Presentation p = free_algebra(n, odd ? 1 : 0, trunc);
    // [T1, T2] = T1 T2 - (-1)^{|T1||T2|} T2 T1
    p.relations.push_back({term({0, 1}), term({1, 0}, odd ? 1 : -1)});
    return p;
  }
  throw DomainError("exceptional variant must be one of A0, A1, B0, B1");
}

}  // namespace cychom::algebras
