#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cychom/rational.hpp"
#include "cychom/series.hpp"
#include "cychom/words.hpp"

namespace cychom {

struct Term {
  Word word;
  Rational coef;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Linear combination of words: distinct words, nonzero coefficients, sorted
/// in decreasing monomial order once normalised.
using Polynomial = std::vector<Term>;

/// Degree-lexicographic order: weight first, then lexicographic with the
/// user-supplied ranking of generators (first listed is largest).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// `largest_first` must be a permutation of the alphabet's letters.
  MonomialOrder(const Alphabet& alphabet, const std::vector<Letter>& largest_first);

  std::strong_ordering compare(const Word& a, const Word& b) const;
  bool greater(const Word& a, const Word& b) const { return compare(a, b) > 0; }
  const std::vector<Letter>& largest_first() const { return largest_first_; }

 private:
  std::vector<int> weight_;
  std::vector<int> rank_;
  std::vector<Letter> largest_first_;
};

/// Finitely presented graded algebra T(V)/(relations).
struct Presentation {
  Alphabet alphabet;
  std::vector<Polynomial> relations;
  std::vector<Letter> order;  ///< generators, largest first
  int trunc = 10;

  /// Generators in declaration order, first largest.
  static Presentation free(Alphabet alphabet, int trunc);
};

/// Sorts terms in decreasing order, merges equal words, drops zeros.
Polynomial normalize(Polynomial p, const MonomialOrder& order);

struct Rule {
  Word lead;        ///< leading word
  Polynomial tail;  ///< lead rewrites to tail; all tail words are smaller
};

/// Rewriting rules confluent for all words of weight <= complete_up_to().
class RewritingSystem {
 public:
  RewritingSystem(Alphabet alphabet, MonomialOrder order, std::vector<Rule> rules, int complete_up_to);

  const Alphabet& alphabet() const { return alphabet_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Rule>& rules() const { return rules_; }
  int complete_up_to() const { return complete_up_to_; }
  const FactorAutomaton& automaton() const { return *automaton_; }

  bool is_normal(const Word& w) const { return !automaton_->find_first(w).has_value(); }

  /// Integer gradings (one vector of generator degrees per basis element) respected by
  /// every rule; weight is always among the spanned gradings.
  const std::vector<std::vector<long>>& gradings() const { return gradings_; }
  /// Degrees of `w` under gradings(), used to split computations into blocks.
  std::vector<long> grading_key(const Word& w) const;

 private:
  Alphabet alphabet_;
  MonomialOrder order_;
  std::vector<Rule> rules_;
  int complete_up_to_;
  std::shared_ptr<const FactorAutomaton> automaton_;
  std::vector<std::vector<long>> gradings_;
};

/// Degree-by-degree completion of a homogeneous presentation up to p.trunc.
/// Throws DomainError for inhomogeneous relations.
RewritingSystem complete(const Presentation& p);

/// Unique normal form of a linear combination of words.
Polynomial normal_form(const RewritingSystem& rs, const Polynomial& element);

/// Normal words up to a weight bound, indexed, with cached products.
class NormalBasis {
 public:
  using Id = std::uint32_t;
  using Combination = std::vector<std::pair<Id, Rational>>;

  NormalBasis(const RewritingSystem& rs, int trunc);

  int trunc() const { return trunc_; }
  std::size_t size() const { return words_.size(); }
  const Word& word(Id id) const { return words_[id]; }
  int weight(Id id) const { return weight_[id]; }
  int parity(Id id) const { return parity_[id]; }
  const std::vector<long>& key(Id id) const { return key_[id]; }
  /// Ids of normal words of weight q, in increasing lexicographic order of letters.
  const std::vector<Id>& of_weight(int q) const { return by_weight_.at(q); }
  std::optional<Id> find(const Word& w) const;

  /// Normal form of word(u) * word(v) in normal-word coordinates.
  /// Requires weight(u) + weight(v) <= trunc().
  const Combination& product(Id u, Id v) const;

  /// Counts of normal words: the Hilbert series of the algebra.
  SignedSeries hilbert_series() const;
  const RewritingSystem& system() const { return *rs_; }

 private:
  const RewritingSystem* rs_;
  int trunc_;
  std::vector<Word> words_;
  std::vector<int> weight_;
  std::vector<int> parity_;
  std::vector<std::vector<long>> key_;
  std::vector<std::vector<Id>> by_weight_;
  std::unordered_map<Word, Id, WordHash> index_;
  mutable std::unordered_map<std::uint64_t, Combination> products_;
};

/// Series of HC_0 = I/[I,I] computed directly: dim I_q minus the rank of the graded
/// commutators NF(uv) - (-1)^{|u||v|} NF(vu) over normal words u, v.
SignedSeries hc0_direct(const RewritingSystem& rs, int trunc);

}  // namespace cychom
