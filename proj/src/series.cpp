#include "cychom/series.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "cychom/error.hpp"

namespace cychom {

// ---------------------------------------------------------------- SignedSeries

SignedSeries::SignedSeries(int trunc) {
  if (trunc < 0) throw DomainError("truncation bound must be nonnegative");
  coef_.resize(static_cast<std::size_t>(trunc) + 1);
}

SignedSeries SignedSeries::one(int trunc) { return monomial(trunc, 0, 0, 1); }

SignedSeries SignedSeries::monomial(int trunc, int weight, int sign, const Rational& c) {
  if (weight < 0) throw DomainError("negative weight");
  SignedSeries f(trunc);
  if (weight <= trunc) {
    if (sign % 2 == 0) {
      f.coef_[weight].even = c;
    } else {
      f.coef_[weight].odd = c;
    }
  }
  return f;
}

SignedSeries SignedSeries::from_pairs(int trunc, const std::vector<CoefPair>& coefs) {
  SignedSeries f(trunc);
  for (int q = 0; q <= trunc && q < static_cast<int>(coefs.size()); ++q) f.coef_[q] = coefs[q];
  return f;
}

int SignedSeries::order() const {
  for (int q = 0; q <= trunc(); ++q) {
    if (!coef_[q].is_zero()) return q;
  }
  return trunc() + 1;
}

bool SignedSeries::has_integer_coefficients() const {
  return std::all_of(coef_.begin(), coef_.end(), [](const CoefPair& c) {
    return is_integer(c.even) && is_integer(c.odd);
  });
}

bool SignedSeries::has_nonnegative_coefficients() const {
  return std::all_of(coef_.begin(), coef_.end(),
                     [](const CoefPair& c) { return c.even >= 0 && c.odd >= 0; });
}

SignedSeries SignedSeries::truncated(int n) const {
  SignedSeries f(std::min(n, trunc()));
  std::copy_n(coef_.begin(), f.coef_.size(), f.coef_.begin());
  return f;
}

SignedSeries SignedSeries::operator-() const {
  SignedSeries f(*this);
  for (auto& c : f.coef_) {
    c.even = -c.even;
    c.odd = -c.odd;
  }
  return f;
}

SignedSeries& SignedSeries::operator+=(const SignedSeries& g) {
  if (g.trunc() < trunc()) coef_.resize(g.coef_.size());
  for (std::size_t q = 0; q < coef_.size(); ++q) {
    coef_[q].even += g.coef_[q].even;
    coef_[q].odd += g.coef_[q].odd;
  }
  return *this;
}

SignedSeries& SignedSeries::operator-=(const SignedSeries& g) {
  if (g.trunc() < trunc()) coef_.resize(g.coef_.size());
  for (std::size_t q = 0; q < coef_.size(); ++q) {
    coef_[q].even -= g.coef_[q].even;
    coef_[q].odd -= g.coef_[q].odd;
  }
  return *this;
}

SignedSeries& SignedSeries::operator*=(const Rational& c) {
  for (auto& p : coef_) {
    p.even *= c;
    p.odd *= c;
  }
  return *this;
}

SignedSeries operator*(const SignedSeries& f, const SignedSeries& g) {
  const int n = std::min(f.trunc(), g.trunc());
  SignedSeries h(n);
  Rational t;
  for (int i = 0; i <= n; ++i) {
    const CoefPair& a = f.coef_[i];
    if (a.is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      const CoefPair& b = g.coef_[j];
      if (b.is_zero()) continue;
      CoefPair& c = h.coef_[i + j];
      // (a0 + a1 y)(b0 + b1 y) = (a0 b0 + a1 b1) + (a0 b1 + a1 b0) y
      t = a.even * b.even;
      c.even += t;
      t = a.odd * b.odd;
      c.even += t;
      t = a.even * b.odd;
      c.odd += t;
      t = a.odd * b.even;
      c.odd += t;
    }
  }
  return h;
}

SignedSeries invert(const SignedSeries& f) {
  if (f.constant().even != 1 || f.constant().odd != 0) {
    throw DomainError("invert: constant term must be 1, got " + render(f.truncated(0)));
  }
  const SignedSeries u = SignedSeries::one(f.trunc()) - f;
  // Horner form of 1 + u + u^2 + ... ; ord(u) >= 1 so trunc() steps suffice.
  SignedSeries g = SignedSeries::one(f.trunc());
  for (int k = 0; k < f.trunc(); ++k) g = SignedSeries::one(f.trunc()) + u * g;
  return g;
}

SignedSeries power(const SignedSeries& f, int k) {
  if (k < 0) return power(invert(f), -k);
  SignedSeries result = SignedSeries::one(f.trunc());
  SignedSeries base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

SignedSeries substitute_power(const SignedSeries& f, int k) {
  if (k < 1) throw DomainError("substitute_power: k must be positive");
  SignedSeries g(f.trunc());
  for (int q = 0; q * k <= f.trunc(); ++q) {
    const CoefPair& c = f[q];
    if (k % 2 == 1) {
      g.at(q * k) = c;
    } else {
      g.at(q * k) = CoefPair{c.even - c.odd, 0};
    }
  }
  return g;
}

SignedSeries compose(const std::vector<Rational>& phi, const SignedSeries& f) {
  if (!f.constant().is_zero()) throw DomainError("compose: inner series must have zero constant term");
  const int n = f.trunc();
  SignedSeries result(n);
  SignedSeries fk = SignedSeries::one(n);
  for (std::size_t k = 0; k < phi.size() && static_cast<int>(k) <= n; ++k) {
    if (k > 0) fk = fk * f;
    if (phi[k] != 0) result += fk * phi[k];
  }
  return result;
}

// ---------------------------------------------------------------- TriSeries

TriSeries TriSeries::monomial(int trunc, int n, int q, int sign, const Rational& c) {
  TriSeries f(trunc);
  f.set(n, q, sign, c);
  return f;
}

TriSeries TriSeries::from_signed(const SignedSeries& f, int n) {
  TriSeries t(f.trunc());
  for (int q = 0; q <= f.trunc(); ++q) {
    t.set(n, q, 0, f.even(q));
    t.set(n, q, 1, f.odd(q));
  }
  return t;
}

TriSeries tri_from_signed(const SignedSeries& f) { return TriSeries::from_signed(f, 0); }

Rational TriSeries::operator()(int n, int q, int sign) const {
  auto it = coef_.find(TriKey{n, q, sign & 1});
  return it == coef_.end() ? Rational(0) : it->second;
}

void TriSeries::set(int n, int q, int sign, const Rational& c) {
  if (n < 0 || q < 0) throw DomainError("negative index in three-variable series");
  if (n > trunc_ || q > trunc_) return;
  TriKey key{n, q, sign & 1};
  if (c == 0) {
    coef_.erase(key);
  } else {
    coef_[key] = c;
  }
}

void TriSeries::add(int n, int q, int sign, const Rational& c) {
  if (c == 0 || n > trunc_ || q > trunc_) return;
  TriKey key{n, q, sign & 1};
  auto [it, inserted] = coef_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coef_.erase(it);
  }
}

bool TriSeries::is_supported() const {
  return std::all_of(coef_.begin(), coef_.end(), [](const auto& kv) { return kv.first.n <= kv.first.q; });
}

SignedSeries TriSeries::slice(int n) const {
  SignedSeries s(trunc_);
  for (const auto& [k, c] : coef_) {
    if (k.n != n) continue;
    if (k.sign == 0) {
      s.at(k.q).even = c;
    } else {
      s.at(k.q).odd = c;
    }
  }
  return s;
}

TriSeries TriSeries::truncated(int n) const {
  TriSeries f(std::min(n, trunc_));
  for (const auto& [k, c] : coef_) f.set(k.n, k.q, k.sign, c);
  return f;
}

TriSeries TriSeries::operator-() const {
  TriSeries f(*this);
  for (auto& kv : f.coef_) kv.second = -kv.second;
  return f;
}

TriSeries& TriSeries::operator+=(const TriSeries& g) {
  if (g.trunc_ < trunc_) *this = truncated(g.trunc_);
  for (const auto& [k, c] : g.coef_) add(k.n, k.q, k.sign, c);
  return *this;
}

TriSeries& TriSeries::operator-=(const TriSeries& g) {
  if (g.trunc_ < trunc_) *this = truncated(g.trunc_);
  for (const auto& [k, c] : g.coef_) add(k.n, k.q, k.sign, -c);
  return *this;
}

TriSeries& TriSeries::operator*=(const Rational& c) {
  if (c == 0) {
    coef_.clear();
    return *this;
  }
  for (auto& kv : coef_) kv.second *= c;
  return *this;
}

TriSeries operator*(const TriSeries& f, const TriSeries& g) {
  TriSeries h(std::min(f.trunc_, g.trunc_));
  for (const auto& [a, ca] : f.coef_) {
    for (const auto& [b, cb] : g.coef_) {
      h.add(a.n + b.n, a.q + b.q, a.sign + b.sign, ca * cb);
    }
  }
  return h;
}

TriSeries invert(const TriSeries& f) {
  const TriSeries u = TriSeries::one(f.trunc()) - f;
  for (const auto& [k, c] : u.terms()) {
    if (k.n == 0 && k.q == 0) {
      throw DomainError("invert: three-variable series must have constant term exactly 1");
    }
  }
  // g = 1 + u g solved coefficientwise; every monomial of u has n+q >= 1, so
  // visiting slots by increasing n+q only reads coefficients already fixed.
  const int trunc = f.trunc();
  TriSeries g(trunc);
  for (int total = 0; total <= 2 * trunc; ++total) {
    for (int n = std::max(0, total - trunc); n <= std::min(total, trunc); ++n) {
      const int q = total - n;
      for (int sign = 0; sign < 2; ++sign) {
        Rational c = (total == 0 && sign == 0) ? 1 : 0;
        for (const auto& [k, cu] : u.terms()) {
          if (k.n > n || k.q > q) continue;
          Rational prev = g(n - k.n, q - k.q, sign ^ k.sign);
          if (prev != 0) c += cu * prev;
        }
        g.set(n, q, sign, c);
      }
    }
  }
  return g;
}

TriSeries power(const TriSeries& f, int k) {
  if (k < 0) return power(invert(f), -k);
  TriSeries result = TriSeries::one(f.trunc());
  for (int i = 0; i < k; ++i) result = result * f;
  return result;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string term_text(const Rational& c, const std::string& mono) {
  if (mono.empty()) return to_string(c);
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return to_string(c) + "*" + mono;
}

void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term.front() == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

std::string power_text(char var, int e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

std::string monomial_text(int sign, int n, int q) {
  std::string m;
  auto push = [&m](const std::string& part) {
    if (part.empty()) return;
    if (!m.empty()) m += "*";
    m += part;
  };
  if (sign) push("y");
  push(power_text('x', n));
  push(power_text('z', q));
  return m;
}

}  // namespace

std::string render(const SignedSeries& f) {
  std::string out;
  for (int q = 0; q <= f.trunc(); ++q) {
    if (f.even(q) != 0) append_term(out, term_text(f.even(q), monomial_text(0, 0, q)));
    if (f.odd(q) != 0) append_term(out, term_text(f.odd(q), monomial_text(1, 0, q)));
  }
  return out.empty() ? "0" : out;
}

std::string render(const TriSeries& f) {
  std::vector<std::pair<TriKey, Rational>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.q, a.first.n, a.first.sign) < std::tie(b.first.q, b.first.n, b.first.sign);
  });
  std::string out;
  for (const auto& [k, c] : terms) append_term(out, term_text(c, monomial_text(k.sign, k.n, k.q)));
  return out.empty() ? "0" : out;
}

std::string render_table(const SignedSeries& f) {
  std::vector<std::string> even, odd;
  std::size_t w = 4;
  for (int q = 0; q <= f.trunc(); ++q) {
    even.push_back(to_string(f.even(q)));
    odd.push_back(to_string(f.odd(q)));
    w = std::max({w, even.back().size(), odd.back().size()});
  }
  std::ostringstream os;
  os << std::setw(4) << "q" << "  " << std::setw(static_cast<int>(w)) << "even" << "  "
     << std::setw(static_cast<int>(w)) << "odd" << "\n";
  for (int q = 0; q <= f.trunc(); ++q) {
    os << std::setw(4) << q << "  " << std::setw(static_cast<int>(w)) << even[q] << "  "
       << std::setw(static_cast<int>(w)) << odd[q] << "\n";
  }
  return os.str();
}

std::string render_table(const TriSeries& f) {
  std::ostringstream os;
  os << std::setw(4) << "n" << std::setw(4) << "q" << std::setw(4) << "e" << "  coef\n";
  std::vector<std::pair<TriKey, Rational>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.q, a.first.n, a.first.sign) < std::tie(b.first.q, b.first.n, b.first.sign);
  });
  for (const auto& [k, c] : terms) {
    os << std::setw(4) << k.n << std::setw(4) << k.q << std::setw(4) << k.sign << "  " << to_string(c)
       << "\n";
  }
  return os.str();
}

}  // namespace cychom
