#include "cychom/rewriting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cychom/error.hpp"
#include "cychom/linalg.hpp"

namespace cychom {

// ---------------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(const Alphabet& alphabet, const std::vector<Letter>& largest_first)
    : largest_first_(largest_first) {
  const std::size_t n = alphabet.size();
  weight_.resize(n);
  rank_.assign(n, -1);
  if (largest_first.size() != n) throw SchemaError("generator order must list every generator exactly once");
  for (std::size_t i = 0; i < n; ++i) {
    const Letter l = largest_first[i];
    if (l >= n || rank_[l] != -1) throw SchemaError("generator order must list every generator exactly once");
    rank_[l] = static_cast<int>(n - i);
    weight_[l] = alphabet[l].weight;
  }
  for (Letter l = 0; l < n; ++l) weight_[l] = alphabet[l].weight;
}

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
  int wa = 0, wb = 0;
  for (Letter l : a) wa += weight_[l];
  for (Letter l : b) wb += weight_[l];
  if (wa != wb) return wa <=> wb;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return rank_[a[i]] <=> rank_[b[i]];
  }
  return a.size() <=> b.size();
}

Presentation Presentation::free(Alphabet alphabet, int trunc) {
  Presentation p;
  p.order.resize(alphabet.size());
  std::iota(p.order.begin(), p.order.end(), 0U);
  p.alphabet = std::move(alphabet);
  p.trunc = trunc;
  return p;
}

Polynomial normalize(Polynomial p, const MonomialOrder& order) {
  std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return order.greater(a.word, b.word); });
  Polynomial out;
  for (auto& t : p) {
    if (!out.empty() && out.back().word == t.word) {
      out.back().coef += t.coef;
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// ---------------------------------------------------------------- RewritingSystem

namespace {

std::vector<long> content(const Word& w, std::size_t n) {
  std::vector<long> c(n, 0);
  for (Letter l : w) ++c[l];
  return c;
}

// Integer basis of the gradings g with g(lead) = g(w) for every tail word w.
std::vector<std::vector<long>> solve_gradings(const Alphabet& alphabet, const std::vector<Rule>& rules) {
  const std::size_t n = alphabet.size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : rules) {
    const auto lead = content(r.lead, n);
    for (const auto& t : r.tail) {
      const auto c = content(t.word, n);
      std::vector<Rational> row(n);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = c[i] - lead[i];
        nonzero = nonzero || row[i] != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  // reduced row echelon form
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<long>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][free];
    Integer den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<long> iv(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer num = v[i].get_num() * (den / v[i].get_den());
      iv[i] = num.get_si();
    }
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace

RewritingSystem::RewritingSystem(Alphabet alphabet, MonomialOrder order, std::vector<Rule> rules,
                                 int complete_up_to)
    : alphabet_(std::move(alphabet)),
      order_(std::move(order)),
      rules_(std::move(rules)),
      complete_up_to_(complete_up_to) {
  std::vector<Word> leads;
  for (const auto& r : rules_) leads.push_back(r.lead);
  automaton_ = std::make_shared<FactorAutomaton>(alphabet_.size(), leads);
  gradings_ = solve_gradings(alphabet_, rules_);
}

std::vector<long> RewritingSystem::grading_key(const Word& w) const {
  std::vector<long> key(gradings_.size(), 0);
  for (Letter l : w) {
    for (std::size_t i = 0; i < gradings_.size(); ++i) key[i] += gradings_[i][l];
  }
  return key;
}

// ---------------------------------------------------------------- normal form

namespace {

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->greater(a, b); }
};

Polynomial reduce(const FactorAutomaton& automaton, const std::vector<Rule>& rules, const MonomialOrder& order,
                  const Polynomial& element) {
  std::map<Word, Rational, OrderGreater> pending(OrderGreater{&order});
  for (const auto& t : element) {
    auto [it, inserted] = pending.try_emplace(t.word, t.coef);
    if (!inserted) it->second += t.coef;
  }
  Polynomial out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    if (node.mapped() == 0) continue;
    const Word& w = node.key();
    auto hit = automaton.find_first(w);
    if (!hit) {
      out.push_back(Term{std::move(node.key()), std::move(node.mapped())});
      continue;
    }
    const auto [start, index] = *hit;
    const Rule& rule = rules[index];
    const auto end = start + rule.lead.size();
    for (const auto& t : rule.tail) {
      Word replaced(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
      replaced.insert(replaced.end(), t.word.begin(), t.word.end());
      replaced.insert(replaced.end(), w.begin() + static_cast<std::ptrdiff_t>(end), w.end());
      Rational c = node.mapped() * t.coef;
      auto [it, inserted] = pending.try_emplace(std::move(replaced), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) pending.erase(it);
      }
    }
  }
  return out;
}

Polynomial rule_polynomial(const Rule& r) {
  Polynomial p{Term{r.lead, 1}};
  for (const auto& t : r.tail) p.push_back(Term{t.word, -t.coef});
  return p;
}

Polynomial multiply(const Word& left, const Polynomial& p, const Word& right, const Rational& c) {
  Polynomial out;
  for (const auto& t : p) {
    Word w = left;
    w.insert(w.end(), t.word.begin(), t.word.end());
    w.insert(w.end(), right.begin(), right.end());
    out.push_back(Term{std::move(w), c * t.coef});
  }
  return out;
}

}  // namespace

Polynomial normal_form(const RewritingSystem& rs, const Polynomial& element) {
  return reduce(rs.automaton(), rs.rules(), rs.order(), element);
}

RewritingSystem complete(const Presentation& p) {
  const MonomialOrder order(p.alphabet, p.order);
  std::map<int, std::vector<Polynomial>> by_weight;
  for (const auto& rel : p.relations) {
    Polynomial r = normalize(rel, order);
    if (r.empty()) continue;
    const int w = p.alphabet.weight(r.front().word);
    const int s = p.alphabet.parity(r.front().word);
    for (const auto& t : r) {
      if (t.word.empty()) throw DomainError("relation has a constant term; relations must lie in the augmentation ideal");
      if (p.alphabet.weight(t.word) != w || p.alphabet.parity(t.word) != s) {
        throw DomainError("relation is not homogeneous in (weight, parity): " + p.alphabet.spell(r.front().word) +
                          " vs " + p.alphabet.spell(t.word));
      }
    }
    by_weight[w].push_back(std::move(r));
  }

  std::vector<Rule> rules;
  for (int d = 1; d <= p.trunc; ++d) {
    std::vector<Polynomial> candidates = by_weight.count(d) ? by_weight[d] : std::vector<Polynomial>{};
    // critical pairs: lead_i = u s, lead_j = s v with s a proper nonempty overlap, weight(u s v) = d
    for (const auto& ri : rules) {
      for (const auto& rj : rules) {
        const auto& a = ri.lead;
        const auto& b = rj.lead;
        for (std::size_t len = 1; len < a.size() && len < b.size(); ++len) {
          if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(len), a.end(), b.begin())) continue;
          Word u(a.begin(), a.end() - static_cast<std::ptrdiff_t>(len));
          Word v(b.begin() + static_cast<std::ptrdiff_t>(len), b.end());
          if (p.alphabet.weight(u) + p.alphabet.weight(b) != d) continue;
          Polynomial s = multiply({}, rule_polynomial(ri), v, 1);
          Polynomial t = multiply(u, rule_polynomial(rj), {}, -1);
          s.insert(s.end(), t.begin(), t.end());
          candidates.push_back(std::move(s));
        }
      }
    }
    if (candidates.empty()) continue;

    FactorAutomaton automaton(p.alphabet.size(), [&] {
      std::vector<Word> leads;
      for (const auto& r : rules) leads.push_back(r.lead);
      return leads;
    }());
    // Reduce against the lower-weight rules, then interreduce the weight-d survivors.
    std::vector<Polynomial> reduced;
    for (const auto& c : candidates) {
      Polynomial r = reduce(automaton, rules, order, normalize(c, order));
      if (!r.empty()) reduced.push_back(std::move(r));
    }
    // Gaussian elimination to reduced echelon form with columns in decreasing word order.
    std::vector<Polynomial> basis;
    for (auto& r : reduced) {
      for (const auto& b : basis) {
        auto it = std::find_if(r.begin(), r.end(), [&](const Term& t) { return t.word == b.front().word; });
        if (it == r.end()) continue;
        Polynomial scaled = multiply({}, b, {}, -it->coef);
        r.insert(r.end(), scaled.begin(), scaled.end());
        r = normalize(std::move(r), order);
      }
      if (r.empty()) continue;
      const Rational inv = 1 / r.front().coef;
      for (auto& t : r) t.coef *= inv;
      for (auto& b : basis) {
        auto it = std::find_if(b.begin(), b.end(), [&](const Term& t) { return t.word == r.front().word; });
        if (it == b.end()) continue;
        Polynomial scaled = multiply({}, r, {}, -it->coef);
        b.insert(b.end(), scaled.begin(), scaled.end());
        b = normalize(std::move(b), order);
      }
      basis.push_back(std::move(r));
    }
    for (auto& b : basis) {
      Rule rule{b.front().word, {}};
      for (std::size_t i = 1; i < b.size(); ++i) rule.tail.push_back(Term{b[i].word, -b[i].coef});
      rules.push_back(std::move(rule));
    }
  }
  return RewritingSystem(p.alphabet, order, std::move(rules), p.trunc);
}

// ---------------------------------------------------------------- NormalBasis

NormalBasis::NormalBasis(const RewritingSystem& rs, int trunc) : rs_(&rs), trunc_(trunc) {
  if (trunc > rs.complete_up_to()) {
    throw DomainError("rewriting system is complete only up to weight " + std::to_string(rs.complete_up_to()) +
                      ", requested " + std::to_string(trunc));
  }
  auto groups = enumerate_avoiding(rs.alphabet(), rs.automaton(), trunc);
  by_weight_.resize(static_cast<std::size_t>(trunc) + 1);
  for (int q = 0; q <= trunc; ++q) {
    for (auto& w : groups[q]) {
      const Id id = static_cast<Id>(words_.size());
      by_weight_[q].push_back(id);
      weight_.push_back(q);
      parity_.push_back(rs.alphabet().parity(w));
      key_.push_back(rs.grading_key(w));
      index_.emplace(w, id);
      words_.push_back(std::move(w));
    }
  }
}

std::optional<NormalBasis::Id> NormalBasis::find(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const NormalBasis::Combination& NormalBasis::product(Id u, Id v) const {
  const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
  auto it = products_.find(key);
  if (it != products_.end()) return it->second;
  if (weight_[u] + weight_[v] > trunc_) throw DomainError("product exceeds the weight bound of the normal basis");
  Word w = words_[u];
  w.insert(w.end(), words_[v].begin(), words_[v].end());
  Combination result;
  for (auto& t : normal_form(*rs_, Polynomial{Term{std::move(w), 1}})) {
    result.emplace_back(index_.at(t.word), std::move(t.coef));
  }
  return products_.emplace(key, std::move(result)).first->second;
}

SignedSeries NormalBasis::hilbert_series() const {
  SignedSeries s(trunc_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto& c = s.at(weight_[i]);
    if (parity_[i] == 0) {
      c.even += 1;
    } else {
      c.odd += 1;
    }
  }
  return s;
}

// ---------------------------------------------------------------- HC_0

SignedSeries hc0_direct(const RewritingSystem& rs, int trunc) {
  NormalBasis basis(rs, trunc);
  SignedSeries out(trunc);
  for (int q = 1; q <= trunc; ++q) {
    // Block by (parity, fine grading); commutators preserve both.
    std::map<std::pair<int, std::vector<long>>, std::vector<NormalBasis::Id>> blocks;
    for (auto id : basis.of_weight(q)) blocks[{basis.parity(id), basis.key(id)}].push_back(id);
    std::map<std::pair<int, std::vector<long>>, std::vector<SparseVector>> spans;
    std::vector<std::uint32_t> local(basis.size(), 0);
    for (const auto& [k, ids] : blocks) {
      for (std::uint32_t i = 0; i < ids.size(); ++i) local[ids[i]] = i;
    }
    for (int wu = 1; wu < q; ++wu) {
      for (auto u : basis.of_weight(wu)) {
        for (auto v : basis.of_weight(q - wu)) {
          // NF(uv) - (-1)^{|u||v|} NF(vu)
          const int sign = (basis.parity(u) & basis.parity(v)) ? -1 : 1;
          std::vector<std::pair<std::uint32_t, Rational>> entries;
          for (const auto& [id, c] : basis.product(u, v)) entries.emplace_back(local[id], c);
          for (const auto& [id, c] : basis.product(v, u)) entries.emplace_back(local[id], -sign * c);
          SparseVector vec = collect(std::move(entries));
          if (vec.empty()) continue;
          std::vector<long> key(basis.key(u).size());
          for (std::size_t i = 0; i < key.size(); ++i) key[i] = basis.key(u)[i] + basis.key(v)[i];
          spans[{basis.parity(u) ^ basis.parity(v), std::move(key)}].push_back(std::move(vec));
        }
      }
    }
    for (const auto& [k, ids] : blocks) {
      auto it = spans.find(k);
      const std::size_t r = it == spans.end() ? 0 : rank(it->second);
      const Rational dim = static_cast<long>(ids.size() - r);
      if (k.first == 0) {
        out.at(q).even += dim;
      } else {
        out.at(q).odd += dim;
      }
    }
  }
  return out;
}

}  // namespace cychom
