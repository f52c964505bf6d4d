#include "cychom/words.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "cychom/error.hpp"

namespace cychom {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letter values
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter l : w) {
    h ^= l + 0x9e37U;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty()) throw SchemaError("generator names must be nonempty");
    if (!seen.insert(g.name).second) throw SchemaError("duplicate generator name '" + g.name + "'");
    if (g.weight < 1) throw SchemaError("generator '" + g.name + "' must have positive weight");
    if (g.parity != 0 && g.parity != 1) throw SchemaError("generator '" + g.name + "' parity must be 0 or 1");
  }
}

Alphabet Alphabet::uniform(int n, int parity, const std::string& prefix) {
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({prefix + std::to_string(i), 1, parity});
  return Alphabet(std::move(gens));
}

Letter Alphabet::index_of(const std::string& name) const {
  for (Letter i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return i;
  }
  throw SchemaError("unknown generator '" + name + "'");
}

int Alphabet::weight(const Word& w) const {
  int s = 0;
  for (Letter l : w) s += gens_.at(l).weight;
  return s;
}

int Alphabet::parity(const Word& w) const {
  int s = 0;
  for (Letter l : w) s ^= gens_.at(l).parity;
  return s;
}

std::string Alphabet::spell(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += gens_.at(w[i]).name;
  }
  return s;
}

SignedSeries Alphabet::series(int trunc) const {
  SignedSeries v(trunc);
  for (const auto& g : gens_) v += SignedSeries::monomial(trunc, g.weight, g.parity);
  return v;
}

// ---------------------------------------------------------------- MonomialSet

MonomialSet::MonomialSet(std::vector<Word> words) : words_(std::move(words)) {
  std::unordered_set<Word, WordHash> seen;
  for (const auto& w : words_) {
    if (w.empty()) throw DomainError("monomial set: empty word");
    if (!seen.insert(w).second) throw DomainError("monomial set: duplicate word");
  }
}

SignedSeries MonomialSet::series(const Alphabet& alphabet, int trunc) const {
  SignedSeries s(trunc);
  for (const auto& w : words_) s += SignedSeries::monomial(trunc, alphabet.weight(w), alphabet.parity(w));
  return s;
}

// ---------------------------------------------------------------- FactorAutomaton

FactorAutomaton::FactorAutomaton(std::size_t alphabet_size, const std::vector<Word>& patterns)
    : sigma_(alphabet_size) {
  constexpr std::uint32_t kNone = UINT32_MAX;
  // trie
  delta_.assign(sigma_, kNone);
  dead_.push_back(false);
  match_.push_back(-1);
  depth_.push_back(0);
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    std::uint32_t s = 0;
    for (Letter l : patterns[p]) {
      if (l >= sigma_) throw DomainError("pattern letter outside the alphabet");
      if (delta_[s * sigma_ + l] == kNone) {
        delta_[s * sigma_ + l] = static_cast<std::uint32_t>(dead_.size());
        dead_.push_back(false);
        match_.push_back(-1);
        depth_.push_back(depth_[s] + 1);
        delta_.resize(dead_.size() * sigma_, kNone);
      }
      s = delta_[s * sigma_ + l];
    }
    dead_[s] = true;
    match_[s] = static_cast<int>(p);
    lengths_.push_back(patterns[p].size());
  }
  // failure links by BFS, completing the transition table on the way
  std::vector<std::uint32_t> fail(dead_.size(), 0);
  std::deque<std::uint32_t> queue;
  for (Letter l = 0; l < sigma_; ++l) {
    std::uint32_t& t = delta_[l];
    if (t == kNone) {
      t = 0;
    } else {
      fail[t] = 0;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    const std::uint32_t s = queue.front();
    queue.pop_front();
    if (!dead_[s] && dead_[fail[s]]) {
      dead_[s] = true;
      match_[s] = match_[fail[s]];
    }
    for (Letter l = 0; l < sigma_; ++l) {
      std::uint32_t& t = delta_[s * sigma_ + l];
      if (t == kNone) {
        t = delta_[fail[s] * sigma_ + l];
      } else {
        fail[t] = delta_[fail[s] * sigma_ + l];
        queue.push_back(t);
      }
    }
  }
}

std::optional<std::pair<std::size_t, int>> FactorAutomaton::find_first(const Word& w) const {
  std::uint32_t s = start();
  for (std::size_t i = 0; i < w.size(); ++i) {
    s = step(s, w[i]);
    if (dead_[s]) return std::make_pair(i + 1 - lengths_[match_[s]], match_[s]);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- strongly free

namespace {

bool is_factor(const Word& small, const Word& big) {
  return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

bool overlaps(const Word& u, const Word& v) {
  for (std::size_t len = 1; len < u.size() && len < v.size(); ++len) {
    if (std::equal(u.end() - static_cast<std::ptrdiff_t>(len), u.end(), v.begin())) return true;
  }
  return false;
}

}  // namespace

bool is_strongly_free_monomials(const MonomialSet& omega) {
  const auto& ws = omega.words();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = 0; j < ws.size(); ++j) {
      if (i != j && is_factor(ws[i], ws[j])) return false;
      if (overlaps(ws[i], ws[j])) return false;
    }
  }
  return true;
}

SignedSeries count_normal_words(const Alphabet& alphabet, const MonomialSet& omega, int trunc) {
  FactorAutomaton automaton(alphabet.size(), omega.words());
  const std::size_t states = automaton.states();
  // counts[q][state] = (even, odd) number of words of weight q ending in `state`
  std::vector<std::vector<std::pair<Integer, Integer>>> counts(
      static_cast<std::size_t>(trunc) + 1, std::vector<std::pair<Integer, Integer>>(states));
  counts[0][FactorAutomaton::start()].first = 1;
  for (int q = 0; q <= trunc; ++q) {
    for (std::uint32_t s = 0; s < states; ++s) {
      const auto& c = counts[q][s];
      if (c.first == 0 && c.second == 0) continue;
      for (Letter l = 0; l < alphabet.size(); ++l) {
        const int w = q + alphabet[l].weight;
        if (w > trunc) continue;
        const std::uint32_t t = automaton.step(s, l);
        if (automaton.dead(t)) continue;
        auto& d = counts[w][t];
        if (alphabet[l].parity == 0) {
          d.first += c.first;
          d.second += c.second;
        } else {
          d.first += c.second;
          d.second += c.first;
        }
      }
    }
  }
  SignedSeries out(trunc);
  for (int q = 0; q <= trunc; ++q) {
    Integer even = 0, odd = 0;
    for (const auto& c : counts[q]) {
      even += c.first;
      odd += c.second;
    }
    out.at(q) = CoefPair{Rational(even), Rational(odd)};
  }
  return out;
}

std::vector<std::vector<Word>> enumerate_avoiding(const Alphabet& alphabet, const FactorAutomaton& avoid,
                                                  int trunc) {
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(trunc) + 1);
  Word current;
  // depth-first, letters in increasing index order, so each weight group is lexicographic
  auto dfs = [&](auto&& self, std::uint32_t state, int weight) -> void {
    out[weight].push_back(current);
    for (Letter l = 0; l < alphabet.size(); ++l) {
      const int w = weight + alphabet[l].weight;
      if (w > trunc) continue;
      const std::uint32_t t = avoid.step(state, l);
      if (avoid.dead(t)) continue;
      current.push_back(l);
      self(self, t, w);
      current.pop_back();
    }
  };
  dfs(dfs, FactorAutomaton::start(), 0);
  for (auto& group : out) std::sort(group.begin(), group.end());
  return out;
}

StronglyFreeReport strongly_free_series_check(const Alphabet& alphabet, const MonomialSet& omega, int trunc) {
  StronglyFreeReport r;
  r.counted = count_normal_words(alphabet, omega, trunc);
  r.predicted = invert(SignedSeries::one(trunc) - alphabet.series(trunc) + omega.series(alphabet, trunc));
  for (int q = 0; q <= trunc; ++q) {
    if (r.counted[q] != r.predicted[q]) {
      r.equal = false;
      r.first_discrepancy = q;
      break;
    }
  }
  return r;
}

}  // namespace cychom
