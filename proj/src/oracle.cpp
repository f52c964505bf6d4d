#include "cychom/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "cychom/calculus.hpp"
#include "cychom/error.hpp"

namespace cychom {

std::size_t TensorHash::operator()(const Tensor& t) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto id : t) {
    h ^= id + 0x51ed27U;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- blocks

GradedBasis build_blocks(const NormalBasis& basis, int trunc, int max_len) {
  if (trunc > basis.trunc()) throw DomainError("tensor blocks requested beyond the normal basis bound");
  GradedBasis out;
  out.trunc = trunc;
  out.max_len = max_len;
  const std::size_t ngrad = basis.system().gradings().size();
  for (int q = 1; q <= trunc; ++q) {
    std::map<std::pair<int, std::vector<long>>, Block> blocks;
    Tensor current;
    std::vector<long> key(ngrad, 0);
    auto dfs = [&](auto&& self, int remaining, int parity) -> void {
      if (remaining == 0) {
        Block& b = blocks[{parity, key}];
        if (b.tensors.empty()) {
          b.q = q;
          b.parity = parity;
          b.key = key;
          b.tensors.resize(static_cast<std::size_t>(max_len) + 1);
          b.index.resize(static_cast<std::size_t>(max_len) + 1);
        }
        const std::size_t m = current.size();
        b.index[m].emplace(current, static_cast<std::uint32_t>(b.tensors[m].size()));
        b.tensors[m].push_back(current);
        return;
      }
      if (static_cast<int>(current.size()) == max_len) return;
      for (int w = 1; w <= remaining; ++w) {
        for (auto id : basis.of_weight(w)) {
          current.push_back(id);
          for (std::size_t i = 0; i < ngrad; ++i) key[i] += basis.key(id)[i];
          self(self, remaining - w, parity ^ basis.parity(id));
          for (std::size_t i = 0; i < ngrad; ++i) key[i] -= basis.key(id)[i];
          current.pop_back();
        }
      }
    };
    dfs(dfs, q, 0);
    for (auto& [k, b] : blocks) out.blocks.push_back(std::move(b));
  }
  return out;
}

// ---------------------------------------------------------------- maps

namespace {

std::string block_name(const Block& b, int m) {
  std::ostringstream os;
  os << "(m=" << m << ", q=" << b.q << ", parity=" << b.parity << ", grading=[";
  for (std::size_t i = 0; i < b.key.size(); ++i) os << (i ? "," : "") << b.key[i];
  os << "])";
  return os.str();
}

SparseMatrix identity(std::size_t n) {
  SparseMatrix id;
  id.rows = n;
  id.cols.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) id.cols[i] = {{i, Rational(1)}};
  return id;
}

SparseMatrix difference(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out;
  out.rows = a.rows;
  out.cols = a.cols;
  for (std::size_t j = 0; j < b.cols.size(); ++j) axpy(out.cols[j], -1, b.cols[j]);
  return out;
}

bool same(const SparseMatrix& a, const SparseMatrix& b) { return a.rows == b.rows && a.cols == b.cols; }

}  // namespace

ChainMaps assemble_maps(const NormalBasis& basis, const Block& block, bool check, std::size_t* checked) {
  const int max_len = static_cast<int>(block.tensors.size()) - 1;
  ChainMaps maps;
  maps.b.resize(static_cast<std::size_t>(max_len) + 1);
  maps.bprime.resize(static_cast<std::size_t>(max_len) + 1);
  maps.t.resize(static_cast<std::size_t>(max_len) + 1);

  auto lookup = [&](int m, const Tensor& t) -> std::uint32_t {
    auto it = block.index[m].find(t);
    if (it == block.index[m].end()) {
      throw InvariantViolation("boundary leaves its block " + block_name(block, m));
    }
    return it->second;
  };

  for (int m = 1; m <= max_len; ++m) {
    const auto& tensors = block.tensors[m];
    SparseMatrix& b = maps.b[m];
    SparseMatrix& bp = maps.bprime[m];
    SparseMatrix& t = maps.t[m];
    b.rows = bp.rows = block.dim(m - 1);
    t.rows = tensors.size();
    b.cols.resize(tensors.size());
    bp.cols.resize(tensors.size());
    t.cols.resize(tensors.size());
    for (std::size_t j = 0; j < tensors.size(); ++j) {
      const Tensor& x = tensors[j];
      std::vector<std::pair<std::uint32_t, Rational>> faces;
      // d_i multiplies the factors i and i+1
      for (int i = 0; i + 1 < m; ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (const auto& [id, c] : basis.product(x[i], x[i + 1])) {
          Tensor y;
          y.reserve(static_cast<std::size_t>(m) - 1);
          y.insert(y.end(), x.begin(), x.begin() + i);
          y.push_back(id);
          y.insert(y.end(), x.begin() + i + 2, x.end());
          faces.emplace_back(lookup(m - 1, y), sign * c);
        }
      }
      bp.cols[j] = collect(faces);
      if (m >= 2) {
        int rest = 0;
        for (int i = 0; i + 1 < m; ++i) rest ^= basis.parity(x[i]);
        int sign = ((m - 1) % 2 == 0) ? 1 : -1;
        if (basis.parity(x[m - 1]) & rest) sign = -sign;
        for (const auto& [id, c] : basis.product(x[m - 1], x[0])) {
          Tensor y;
          y.reserve(static_cast<std::size_t>(m) - 1);
          y.push_back(id);
          y.insert(y.end(), x.begin() + 1, x.end() - 1);
          faces.emplace_back(lookup(m - 1, y), sign * c);
        }
      }
      b.cols[j] = collect(std::move(faces));

      int rest = 0;
      for (int i = 0; i + 1 < m; ++i) rest ^= basis.parity(x[i]);
      int sign = ((m - 1) % 2 == 0) ? 1 : -1;
      if (basis.parity(x[m - 1]) & rest) sign = -sign;
      Tensor y;
      y.reserve(x.size());
      y.push_back(x.back());
      y.insert(y.end(), x.begin(), x.end() - 1);
      t.cols[j] = {{lookup(m, y), Rational(sign)}};
    }
  }

  if (!check) return maps;
  std::size_t count = 0;
  for (int m = 1; m <= max_len; ++m) {
    if (block.dim(m) == 0) continue;
    if (m >= 2) {
      if (!maps.b[m - 1].compose(maps.b[m]).is_zero()) {
        throw InvariantViolation("b∘b != 0 on block " + block_name(block, m));
      }
      if (!maps.bprime[m - 1].compose(maps.bprime[m]).is_zero()) {
        throw InvariantViolation("b'∘b' != 0 on block " + block_name(block, m));
      }
      count += 2;
    }
    const SparseMatrix one_minus_t = difference(identity(block.dim(m)), maps.t[m]);
    const SparseMatrix one_minus_t_low = difference(identity(block.dim(m - 1)), maps.t[m - 1]);
    const SparseMatrix lhs = maps.b[m].compose(one_minus_t);
    const SparseMatrix rhs = m >= 2 ? one_minus_t_low.compose(maps.bprime[m]) : maps.bprime[m];
    if (!same(lhs, rhs)) throw InvariantViolation("b∘(1-t) != (1-t)∘b' on block " + block_name(block, m));
    SparseMatrix power = maps.t[m];
    for (int k = 1; k < m; ++k) power = maps.t[m].compose(power);
    if (!same(power, identity(block.dim(m)))) throw InvariantViolation("t^m != 1 on block " + block_name(block, m));
    count += 2;
  }
  if (checked) *checked += count;
  return maps;
}

// ---------------------------------------------------------------- homology

namespace {

struct Orbits {
  std::vector<std::int32_t> orbit;  ///< per tensor: live orbit index or -1
  std::vector<int> sign;            ///< tensor ≡ sign * representative in coker(1-t)
  std::vector<std::uint32_t> reps;  ///< representative tensor of each live orbit
};

Orbits rotation_orbits(const SparseMatrix& t) {
  const std::size_t n = t.cols.size();
  Orbits o;
  o.orbit.assign(n, -2);
  o.sign.assign(n, 0);
  for (std::uint32_t start = 0; start < n; ++start) {
    if (o.orbit[start] != -2) continue;
    std::vector<std::pair<std::uint32_t, int>> members{{start, 1}};
    std::uint32_t cur = start;
    int sigma = 1;
    while (true) {
      const auto& [next, c] = t.cols[cur].front();
      sigma *= c > 0 ? 1 : -1;
      cur = next;
      if (cur == start) break;
      members.emplace_back(cur, sigma);
    }
    const bool live = sigma == 1;
    const std::int32_t id = live ? static_cast<std::int32_t>(o.reps.size()) : -1;
    if (live) o.reps.push_back(start);
    for (const auto& [member, s] : members) {
      o.orbit[member] = id;
      o.sign[member] = s;
    }
  }
  return o;
}

std::size_t tracked_rank(const std::vector<SparseVector>& vectors, OracleChecks& checks) {
  const std::size_t r = rank(vectors);
  checks.used_bignum = checks.used_bignum || last_rank_stats().used_bignum;
  return r;
}

void shift_into(std::vector<std::pair<std::uint32_t, Rational>>& out, const SparseVector& v, std::uint32_t offset,
                const Rational& scale) {
  for (const auto& [i, c] : v) out.emplace_back(i + offset, scale * c);
}

}  // namespace

long HomologyTable::hh_dim(int n, int q, int sign) const {
  auto it = hh.find(TriKey{n, q, sign});
  return it == hh.end() ? 0 : it->second;
}

long HomologyTable::hc_dim(int n, int q, int sign) const {
  auto it = hc.find(TriKey{n, q, sign});
  return it == hc.end() ? 0 : it->second;
}

TriSeries HomologyTable::hh_series() const {
  TriSeries s(trunc);
  for (const auto& [k, d] : hh) s.set(k.n, k.q, k.sign, d);
  return s;
}

TriSeries HomologyTable::hc_series() const {
  TriSeries s(trunc);
  for (const auto& [k, d] : hc) s.set(k.n, k.q, k.sign, d);
  return s;
}

HomologyTable run_oracle(const RewritingSystem& rs, int trunc, int max_hdeg, const std::string& hash) {
  if (trunc < 0) throw DomainError("weight bound must be nonnegative");
  if (max_hdeg < 0) max_hdeg = trunc;
  if (rs.complete_up_to() < trunc) {
    throw DomainError("rewriting system is complete only up to weight " + std::to_string(rs.complete_up_to()) +
                      ", oracle requested at N=" + std::to_string(trunc));
  }
  HomologyTable table;
  table.presentation_hash = hash;
  table.trunc = trunc;
  table.max_hdeg = max_hdeg;
  table.hh[TriKey{0, 0, 0}] = 1;
  OracleChecks& checks = table.checks;

  const NormalBasis basis(rs, trunc);
  const int max_len = max_hdeg + 2;
  const GradedBasis graded = build_blocks(basis, trunc, max_len);
  checks.blocks = graded.blocks.size();

  for (const Block& block : graded.blocks) {
    const ChainMaps maps = assemble_maps(basis, block, true, &checks.identities);
    const int top = std::min(max_len, block.q);
    auto dim = [&](int m) -> std::size_t { return (m >= 1 && m <= top) ? block.dim(m) : 0; };

    // Total complex: C_n = I^{⊗n} ⊕ I^{⊗(n+1)}, D = (-b', 1-t; 0, b).
    std::vector<std::size_t> tot_rank(static_cast<std::size_t>(max_hdeg) + 2, 0);
    for (int n = 1; n <= max_hdeg + 1; ++n) {
      std::vector<SparseVector> cols;
      const auto offset = static_cast<std::uint32_t>(dim(n - 1));
      if (n <= top) {
        for (std::size_t j = 0; j < dim(n); ++j) {
          std::vector<std::pair<std::uint32_t, Rational>> e;
          if (n - 1 >= 1) shift_into(e, maps.bprime[n].cols[j], 0, -1);
          e.emplace_back(static_cast<std::uint32_t>(j) + offset, 1);
          shift_into(e, maps.t[n].cols[j], offset, -1);
          cols.push_back(collect(std::move(e)));
        }
      }
      if (n + 1 <= top) {
        for (std::size_t j = 0; j < dim(n + 1); ++j) {
          std::vector<std::pair<std::uint32_t, Rational>> e;
          shift_into(e, maps.b[n + 1].cols[j], offset, 1);
          cols.push_back(collect(std::move(e)));
        }
      }
      tot_rank[n] = tracked_rank(cols, checks);
    }
    for (int n = 0; n <= max_hdeg; ++n) {
      const std::size_t c = dim(n) + dim(n + 1);
      const long h = static_cast<long>(c) - static_cast<long>(n >= 1 ? tot_rank[n] : 0) -
                     static_cast<long>(tot_rank[n + 1]);
      if (h != 0) table.hh[TriKey{n, block.q, (block.parity + n) % 2}] += h;
    }

    // Connes complex (coker(1-t), b̄) and its norm-map twin (ker(1-t), b').
    std::vector<Orbits> orbits(static_cast<std::size_t>(max_len) + 1);
    for (int m = 1; m <= top; ++m) orbits[m] = rotation_orbits(maps.t[m]);
    std::vector<std::size_t> coker_rank(static_cast<std::size_t>(max_len) + 2, 0);
    std::vector<std::size_t> ker_rank(static_cast<std::size_t>(max_len) + 2, 0);
    for (int m = 2; m <= top; ++m) {
      const Orbits& hi = orbits[m];
      const Orbits& lo = orbits[m - 1];
      std::vector<SparseVector> bbar;
      std::vector<SparseVector> bnorm;
      for (std::uint32_t rep : hi.reps) {
        std::vector<std::pair<std::uint32_t, Rational>> e;
        for (const auto& [i, c] : maps.b[m].cols[rep]) {
          if (lo.orbit[i] >= 0) e.emplace_back(static_cast<std::uint32_t>(lo.orbit[i]), lo.sign[i] * c);
        }
        bbar.push_back(collect(std::move(e)));
      }
      std::vector<std::int32_t> rep_index(block.dim(m - 1), -1);
      for (std::size_t p = 0; p < lo.reps.size(); ++p) rep_index[lo.reps[p]] = static_cast<std::int32_t>(p);
      std::vector<std::vector<std::pair<std::uint32_t, Rational>>> norm_images(hi.reps.size());
      for (std::size_t j = 0; j < hi.orbit.size(); ++j) {
        const std::int32_t o = hi.orbit[j];
        if (o < 0) continue;
        for (const auto& [i, c] : maps.bprime[m].cols[j]) {
          if (rep_index[i] >= 0) norm_images[o].emplace_back(static_cast<std::uint32_t>(rep_index[i]), hi.sign[j] * c);
        }
      }
      for (auto& e : norm_images) bnorm.push_back(collect(std::move(e)));
      coker_rank[m] = tracked_rank(bbar, checks);
      ker_rank[m] = tracked_rank(bnorm, checks);
    }
    for (int n = 0; n <= max_hdeg; ++n) {
      const int m = n + 1;
      if (m > top) break;
      const long live = static_cast<long>(orbits[m].reps.size());
      const long hc = live - static_cast<long>(coker_rank[m]) - static_cast<long>(coker_rank[m + 1]);
      const long hk = live - static_cast<long>(ker_rank[m]) - static_cast<long>(ker_rank[m + 1]);
      if (hc != hk) checks.norm_map_agrees = false;
      if (hc != 0) table.hc[TriKey{n, block.q, (block.parity + n) % 2}] += hc;
    }
  }

  const SignedSeries direct = hc0_direct(rs, trunc);
  for (int q = 1; q <= trunc; ++q) {
    if (direct.even(q) != table.hc_dim(0, q, 0) || direct.odd(q) != table.hc_dim(0, q, 1)) {
      checks.hc0_matches_direct = false;
    }
  }

  const TriSeries expected_hh = hh_from_hc(table.hc_series());
  for (int q = 0; q <= trunc && checks.hh_hc_consistent; ++q) {
    for (int n = 0; n <= std::min(q, max_hdeg) && checks.hh_hc_consistent; ++n) {
      for (int e = 0; e < 2; ++e) {
        if (expected_hh(n, q, e) != table.hh_dim(n, q, e)) {
          checks.hh_hc_consistent = false;
          checks.hh_hc_first_violation = TriKey{n, q, e};
          break;
        }
      }
    }
  }
  return table;
}

// ---------------------------------------------------------------- serialization

nlohmann::json to_json(const HomologyTable& t) {
  auto slots = [](const std::map<TriKey, long>& m) {
    std::vector<TriKey> keys;
    for (const auto& [k, d] : m) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const TriKey& a, const TriKey& b) {
      return std::tie(a.q, a.n, a.sign) < std::tie(b.q, b.n, b.sign);
    });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& k : keys) arr.push_back({k.n, k.q, k.sign, m.at(k)});
    return arr;
  };
  return {{"presentation_hash", t.presentation_hash},
          {"N", t.trunc},
          {"max_hdeg", t.max_hdeg},
          {"hh", slots(t.hh)},
          {"hc", slots(t.hc)}};
}

HomologyTable homology_table_from_json(const nlohmann::json& j) {
  HomologyTable t;
  try {
    t.presentation_hash = j.at("presentation_hash").get<std::string>();
    t.trunc = j.at("N").get<int>();
    t.max_hdeg = j.at("max_hdeg").get<int>();
    for (const char* field : {"hh", "hc"}) {
      auto& target = std::string(field) == "hh" ? t.hh : t.hc;
      for (const auto& s : j.at(field)) {
        if (!s.is_array() || s.size() != 4) throw SchemaError(std::string("$.") + field + ": expected [n, q, e, dim]");
        target[TriKey{s[0].get<int>(), s[1].get<int>(), s[2].get<int>()}] = s[3].get<long>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("homology table: ") + e.what());
  }
  return t;
}

std::string render_table(const HomologyTable& t) {
  std::ostringstream os;
  os << "presentation " << (t.presentation_hash.empty() ? "-" : t.presentation_hash) << "  N=" << t.trunc
     << "  max_hdeg=" << t.max_hdeg << "\n";
  auto section = [&](const char* title, const std::map<TriKey, long>& m) {
    os << title << "\n";
    os << "     q |";
    for (int n = 0; n <= t.max_hdeg; ++n) os << "      n=" << n << (n < 10 ? " " : "");
    os << "\n";
    for (int q = 0; q <= t.trunc; ++q) {
      os << (q < 10 ? "     " : "    ") << q << " |";
      for (int n = 0; n <= t.max_hdeg; ++n) {
        auto e = m.find(TriKey{n, q, 0});
        auto o = m.find(TriKey{n, q, 1});
        std::string cell = std::to_string(e == m.end() ? 0 : e->second) + "+" +
                           std::to_string(o == m.end() ? 0 : o->second) + "y";
        os << std::string(cell.size() < 10 ? 10 - cell.size() : 1, ' ') << cell;
      }
      os << "\n";
    }
  };
  section("HH (even+odd)", t.hh);
  section("HC (even+odd)", t.hc);
  const auto& c = t.checks;
  os << "checks: blocks=" << c.blocks << " identities=" << c.identities
     << " norm_map=" << (c.norm_map_agrees ? "ok" : "FAIL") << " hc0_direct=" << (c.hc0_matches_direct ? "ok" : "FAIL")
     << " hh-hc=" << (c.hh_hc_consistent ? "ok" : "FAIL") << "\n";
  return os.str();
}

// ---------------------------------------------------------------- comparisons

SlotReport verify_against(const HomologyTable& table, const TriSeries& predicted, HomologyKind kind) {
  SlotReport r;
  const int qmax = std::min(table.trunc, predicted.trunc());
  for (int q = 0; q <= qmax; ++q) {
    for (int n = 0; n <= table.max_hdeg; ++n) {
      for (int e = 0; e < 2; ++e) {
        const Rational computed = kind == HomologyKind::kHochschild ? table.hh_dim(n, q, e) : table.hc_dim(n, q, e);
        const Rational expected = predicted(n, q, e);
        ++r.slots_compared;
        if (r.equal && computed != expected) {
          r.equal = false;
          r.first_discrepancy = TriKey{n, q, e};
          r.expected = expected;
          r.computed = computed;
        }
      }
    }
  }
  return r;
}

namespace {

SlotReport compare_remapped(const HomologyTable& a, const HomologyTable& d, HomologyKind kind) {
  SlotReport r;
  const int qmax = std::min(a.trunc, d.trunc);
  for (int q = 0; q <= qmax; ++q) {
    for (int n = 0; n <= a.max_hdeg; ++n) {
      const int m = kind == HomologyKind::kHochschild ? q - n : q - n - 1;
      if (m < 0 || m > d.max_hdeg) continue;
      for (int e = 0; e < 2; ++e) {
        const int f = kind == HomologyKind::kHochschild ? e : 1 - e;
        const Rational lhs = kind == HomologyKind::kHochschild ? a.hh_dim(n, q, e) : a.hc_dim(n, q, e);
        const Rational rhs = kind == HomologyKind::kHochschild ? d.hh_dim(m, q, f) : d.hc_dim(m, q, f);
        ++r.slots_compared;
        if (r.equal && lhs != rhs) {
          r.equal = false;
          r.first_discrepancy = TriKey{n, q, e};
          r.expected = lhs;
          r.computed = rhs;
        }
      }
    }
  }
  return r;
}

}  // namespace

KoszulReport koszul_check(const HomologyTable& a, const HomologyTable& a_dual) {
  return KoszulReport{compare_remapped(a, a_dual, HomologyKind::kHochschild),
                      compare_remapped(a, a_dual, HomologyKind::kCyclic)};
}

KoszulReport koszul_check(const RewritingSystem& a, const RewritingSystem& a_dual, int trunc) {
  return koszul_check(run_oracle(a, trunc), run_oracle(a_dual, trunc));
}

}  // namespace cychom
