#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cychom/series.hpp"

namespace cychom {

using Letter = std::uint32_t;
/// A word is a sequence of generator indices into an Alphabet.
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

struct Generator {
  std::string name;
  int weight = 1;
  int parity = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Weighted, signed generators. Names are unique, weights positive, parities 0 or 1.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);

  /// n generators named prefix1..prefixn, all of weight one and the given parity.
  static Alphabet uniform(int n, int parity, const std::string& prefix = "T");

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](Letter l) const { return gens_.at(l); }
  const std::vector<Generator>& generators() const { return gens_; }
  /// Throws SchemaError for unknown names.
  Letter index_of(const std::string& name) const;

  int weight(const Word& w) const;
  int parity(const Word& w) const;
  std::string spell(const Word& w) const;

  /// The generating series V(z, y) = sum y^parity z^weight.
  SignedSeries series(int trunc) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Generator> gens_;
};

/// A finite set of nonempty, pairwise distinct monomials.
class MonomialSet {
 public:
  MonomialSet() = default;
  explicit MonomialSet(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  bool empty() const { return words_.empty(); }
  /// omega(z, y) = sum over members of y^parity z^weight.
  SignedSeries series(const Alphabet& alphabet, int trunc) const;

 private:
  std::vector<Word> words_;
};

/// Aho-Corasick automaton recognising words that contain a pattern as a factor.
///
/// Transitions are completed through failure links, so stepping is one table
/// lookup. A state is dead when some pattern ends at the current position.
class FactorAutomaton {
 public:
  FactorAutomaton(std::size_t alphabet_size, const std::vector<Word>& patterns);

  std::size_t states() const { return dead_.size(); }
  static constexpr std::uint32_t start() { return 0; }
  std::uint32_t step(std::uint32_t state, Letter l) const { return delta_[state * sigma_ + l]; }
  bool dead(std::uint32_t state) const { return dead_[state]; }
  /// For a dead state: index of one pattern that ends here (the longest).
  int match(std::uint32_t state) const { return match_[state]; }
  /// Position of the leftmost occurrence of any pattern in `w` as (start, pattern index).
  std::optional<std::pair<std::size_t, int>> find_first(const Word& w) const;

 private:
  std::size_t sigma_;
  std::vector<std::uint32_t> delta_;
  std::vector<bool> dead_;
  std::vector<int> match_;
  std::vector<int> depth_;
  std::vector<std::size_t> lengths_;
};

/// Anick's criterion: no member is a factor of another and no proper nonempty
/// suffix of a member equals a proper nonempty prefix of a member (self-pairs included).
bool is_strongly_free_monomials(const MonomialSet& omega);

/// Hilbert series of T(V)/(omega) for monomial omega: counts words avoiding omega.
SignedSeries count_normal_words(const Alphabet& alphabet, const MonomialSet& omega, int trunc);

/// Words avoiding every pattern of `avoid`, grouped by weight 0..trunc, each group in
/// increasing lexicographic order of letter indices.
std::vector<std::vector<Word>> enumerate_avoiding(const Alphabet& alphabet, const FactorAutomaton& avoid,
                                                  int trunc);

struct StronglyFreeReport {
  bool equal = true;
  std::optional<int> first_discrepancy;  ///< weight of the first differing coefficient
  SignedSeries counted;                  ///< series of T(V)/(omega)
  SignedSeries predicted;                ///< 1/(1 - V + omega)
};

StronglyFreeReport strongly_free_series_check(const Alphabet& alphabet, const MonomialSet& omega, int trunc);

}  // namespace cychom
