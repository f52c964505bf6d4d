#include "cychom/expr.hpp"

#include <cctype>
#include <functional>
#include <map>

#include "cychom/calculus.hpp"
#include "cychom/transforms.hpp"

namespace cychom {

ParseError::ParseError(const std::string& message, std::size_t offset, std::size_t line, std::size_t column)
    : Error("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + " (offset " +
            std::to_string(offset) + "): " + message),
      offset(offset),
      line(line),
      column(column),
      message(message) {}

EvalError::EvalError(const std::string& message, std::size_t offset, std::size_t length)
    : Error("at offset " + std::to_string(offset) + ": " + message), offset(offset), length(length) {}

namespace {

enum class Arg { kSeries, kTri, kInt };

struct Function {
  std::vector<Arg> args;
  std::string help;
};

const std::map<std::string, Function>& functions() {
  static const std::map<std::string, Function> table = {
      {"hcfree", {{Arg::kSeries}, "hcfree(V): series of HC_0 of the tensor algebra on V"}},
      {"lie", {{Arg::kSeries}, "lie(X): Moebius logarithm, inverse of S"}},
      {"S", {{Arg::kSeries}, "S(X): symmetric-algebra exponential (integer coefficients)"}},
      {"log", {{Arg::kSeries}, "log(X): logarithm, X(0) = 1"}},
      {"exp", {{Arg::kSeries}, "exp(X): exponential, X(0) = 0"}},
      {"inv", {{Arg::kTri}, "inv(X): multiplicative inverse of a unit"}},
      {"subst", {{Arg::kSeries, Arg::kInt}, "subst(f, k): z -> z^k, y -> (-1)^(k+1) y^k"}},
      {"hkr", {{Arg::kInt}, "hkr(n): (1+yxz)^n/(1-z)^n"}},
      {"exterior", {{Arg::kInt}, "exterior(n): (1+yz)^n/(1-xz)^n"}},
      {"hh_from_hc", {{Arg::kTri}, "hh_from_hc(HC): 1 + (1+xy) HC"}},
      {"hc_from_hh", {{Arg::kTri}, "hc_from_hh(HH): (HH - 1)/(1+xy)"}},
      {"koszul_hh", {{Arg::kTri}, "koszul_hh(HH): (n,q,e) -> (q-n,q,e)"}},
      {"koszul_hc", {{Arg::kTri}, "koszul_hc(HC): (n,q,e) -> (q-n-1,q,e+1)"}},
      {"diag", {{Arg::kTri}, "diag(HH): the slots (q,q,e)"}},
      {"slice", {{Arg::kTri, Arg::kInt}, "slice(F, n): coefficient of x^n"}},
      {"generic_quadratic", {{Arg::kInt}, "generic_quadratic(n)"}},
      {"generic_symmetric", {{Arg::kInt}, "generic_symmetric(n)"}},
      {"generic_symmetric_many", {{Arg::kInt, Arg::kInt, Arg::kInt, Arg::kInt}, "generic_symmetric_many(n, r, j, k)"}},
      {"polynomial_generic", {{Arg::kInt, Arg::kInt, Arg::kInt, Arg::kInt}, "polynomial_generic(n, r, j, k)"}},
      {"exceptional_A0", {{Arg::kInt}, "exceptional_A0(n)"}},
      {"exceptional_A1", {{Arg::kInt}, "exceptional_A1(n)"}},
      {"exceptional_B0", {{Arg::kInt}, "exceptional_B0(n)"}},
      {"exceptional_B1", {{Arg::kInt}, "exceptional_B1(n)"}},
  };
  return table;
}

// subst_k(f) is shorthand for subst(f, k)
bool is_subst_shorthand(const std::string& name) {
  if (name.size() <= 6 || name.compare(0, 6, "subst_") != 0) return false;
  for (std::size_t i = 6; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  }
  return name[6] != '0';
}

std::size_t arity(const std::string& name) {
  if (is_subst_shorthand(name)) return 1;
  return functions().at(name).args.size();
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr run() {
    skip();
    ExprPtr e = sum();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(message, at, line, col);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("unexpected end of input, expected '") + c + "'");
      fail(std::string("expected '") + c + "'");
    }
  }

  static ExprPtr node(Expr::Kind kind, std::size_t begin, std::size_t end) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->offset = begin;
    e->length = end - begin;
    return e;
  }

  ExprPtr binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
    auto e = node(kind, lhs->offset, rhs->offset + rhs->length);
    e->args.push_back(std::move(lhs));
    e->args.push_back(std::move(rhs));
    return e;
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    while (true) {
      if (accept('+')) {
        lhs = binary(Expr::Kind::kAdd, std::move(lhs), product());
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::kSub, std::move(lhs), product());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = binary(Expr::Kind::kMul, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::kDiv, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    skip();
    const std::size_t begin = pos_;
    if (accept('-')) {
      ExprPtr child = unary();
      auto e = node(Expr::Kind::kNeg, begin, child->offset + child->length);
      e->args.push_back(std::move(child));
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (accept('^')) return binary(Expr::Kind::kPow, std::move(base), unary());
    return base;
  }

  ExprPtr primary() {
    skip();
    const std::size_t begin = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input, expected an expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto e = node(Expr::Kind::kNumber, begin, pos_);
      e->text = text_.substr(begin, pos_ - begin);
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = text_.substr(begin, pos_ - begin);
      skip();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        if (!functions().count(name) && !is_subst_shorthand(name)) fail_at("unknown function '" + name + "'", begin);
        ++pos_;
        auto e = node(Expr::Kind::kCall, begin, begin);
        e->text = name;
        e->args.push_back(sum());
        while (accept(',')) e->args.push_back(sum());
        expect(')');
        e->length = pos_ - begin;
        if (e->args.size() != arity(name)) {
          fail_at("function '" + name + "' takes " + std::to_string(arity(name)) + " argument(s), got " +
                      std::to_string(e->args.size()),
                  begin);
        }
        return e;
      }
      if (name != "z" && name != "y" && name != "x") {
        if (functions().count(name) || is_subst_shorthand(name)) fail_at("function '" + name + "' needs arguments", begin);
        fail_at("unknown symbol '" + name + "' (symbols are z, y, x)", begin);
      }
      auto e = node(Expr::Kind::kSymbol, begin, begin + name.size());
      e->text = name;
      return e;
    }
    if (accept('(')) {
      ExprPtr inner = sum();
      expect(')');
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "', expected an expression");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- rendering

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      return 1;
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv:
      return 2;
    case Expr::Kind::kNeg:
      return 3;
    case Expr::Kind::kPow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = render(e);
  return precedence(e) >= min_prec ? s : "(" + s + ")";
}

// ---------------------------------------------------------------- evaluation

TriSeries to_tri(const Value& v) {
  if (const auto* s = std::get_if<SignedSeries>(&v)) return tri_from_signed(*s);
  return std::get<TriSeries>(v);
}

int common_trunc(const Value& a, const Value& b) {
  auto t = [](const Value& v) { return std::visit([](const auto& s) { return s.trunc(); }, v); };
  return std::min(t(a), t(b));
}

class Evaluator {
 public:
  explicit Evaluator(int trunc) : trunc_(trunc) {}

  Value eval(const Expr& e) {
    try {
      return dispatch(e);
    } catch (const EvalError&) {
      throw;
    } catch (const std::exception& ex) {
      throw EvalError(ex.what(), e.offset, e.length);
    }
  }

 private:
  [[noreturn]] static void fail(const Expr& e, const std::string& message) {
    throw EvalError(message, e.offset, e.length);
  }

  SignedSeries signed_arg(const Expr& e) {
    Value v = eval(e);
    if (auto* s = std::get_if<SignedSeries>(&v)) return std::move(*s);
    const TriSeries& t = std::get<TriSeries>(v);
    for (const auto& [k, c] : t.terms()) {
      if (k.n != 0) fail(e, "expected a series in z and y, got a term in x");
    }
    return t.slice(0);
  }

  Rational constant_of(const Expr& e) {
    const SignedSeries s = signed_arg(e);
    for (int q = 1; q <= s.trunc(); ++q) {
      if (!s[q].is_zero()) fail(e, "expected a constant");
    }
    if (s.constant().odd != 0) fail(e, "expected a constant without y");
    return s.constant().even;
  }

  int int_arg(const Expr& e, long lo, long hi) {
    const Rational c = constant_of(e);
    if (!is_integer(c)) fail(e, "expected an integer, got " + to_string(c));
    if (c < lo || c > hi) {
      fail(e, "integer " + to_string(c) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return static_cast<int>(c.get_num().get_si());
  }

  // Unit constant term c (no y part); returns c.
  static Rational unit_constant(const Value& v, const Expr& at) {
    if (const auto* s = std::get_if<SignedSeries>(&v)) {
      if (s->constant().odd != 0 || s->constant().even == 0) {
        fail(at, "not invertible: the constant term must be a nonzero rational without y");
      }
      return s->constant().even;
    }
    const auto& t = std::get<TriSeries>(v);
    if (t(0, 0, 1) != 0 || t(0, 0, 0) == 0) {
      fail(at, "not invertible: the constant term must be a nonzero rational without y");
    }
    return t(0, 0, 0);
  }

  static Value reciprocal(const Value& v, const Expr& at) {
    const Rational c = unit_constant(v, at);
    const Rational inv_c = 1 / c;
    if (const auto* s = std::get_if<SignedSeries>(&v)) return invert(*s * inv_c) * inv_c;
    return invert(std::get<TriSeries>(v) * inv_c) * inv_c;
  }

  Value dispatch(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
      case K::kNumber:
        return SignedSeries::one(trunc_) * Rational(Integer(e.text));
      case K::kSymbol:
        if (e.text == "z") return SignedSeries::monomial(trunc_, 1, 0);
        if (e.text == "y") return SignedSeries::monomial(trunc_, 0, 1);
        return TriSeries::monomial(trunc_, 1, 0, 0);
      case K::kNeg: {
        Value v = eval(*e.args[0]);
        return std::visit([](auto& s) -> Value { return -s; }, v);
      }
      case K::kAdd:
      case K::kSub:
      case K::kMul:
      case K::kDiv: {
        Value a = eval(*e.args[0]);
        Value b = eval(*e.args[1]);
        if (e.kind == K::kDiv) b = reciprocal(b, *e.args[1]);
        if (std::holds_alternative<SignedSeries>(a) && std::holds_alternative<SignedSeries>(b)) {
          const auto& f = std::get<SignedSeries>(a);
          const auto& g = std::get<SignedSeries>(b);
          if (e.kind == K::kAdd) return f + g;
          if (e.kind == K::kSub) return f - g;
          return f * g;
        }
        const int t = common_trunc(a, b);
        TriSeries f = to_tri(a).truncated(t);
        TriSeries g = to_tri(b).truncated(t);
        if (e.kind == K::kAdd) return f + g;
        if (e.kind == K::kSub) return f - g;
        return f * g;
      }
      case K::kPow: {
        const int k = int_arg(*e.args[1], -4096, 4096);
        Value base = eval(*e.args[0]);
        if (k < 0) base = reciprocal(base, *e.args[0]);
        const int m = k < 0 ? -k : k;
        return std::visit([m](const auto& s) -> Value { return power(s, m); }, base);
      }
      case K::kCall:
        return call(e);
    }
    fail(e, "unreachable");
  }

  Value call(const Expr& e) {
    const std::string& f = e.text;
    const auto& a = e.args;
    if (is_subst_shorthand(f)) {
      if (f.size() > 10) fail(e, "substitution power too large");
      return substitute_power(signed_arg(*a[0]), std::stoi(f.substr(6)));
    }
    if (f == "hcfree") return hcfree(signed_arg(*a[0]));
    if (f == "lie") return lie_log(signed_arg(*a[0]));
    if (f == "S") return sym_exp(signed_arg(*a[0]));
    if (f == "log") return log_series(signed_arg(*a[0]));
    if (f == "exp") return exp_series(signed_arg(*a[0]));
    if (f == "inv") return reciprocal(eval(*a[0]), *a[0]);
    if (f == "subst") {
      SignedSeries s = signed_arg(*a[0]);
      return substitute_power(s, int_arg(*a[1], 1, 1000000));
    }
    if (f == "hkr") return hkr(int_arg(*a[0], 1, 1000), trunc_);
    if (f == "exterior") return exterior_hh(int_arg(*a[0], 1, 1000), trunc_);
    if (f == "hh_from_hc") return hh_from_hc(to_tri(eval(*a[0])));
    if (f == "hc_from_hh") return hc_from_hh(to_tri(eval(*a[0])));
    if (f == "koszul_hh") return koszul_dual(to_tri(eval(*a[0])), DualityRemap::kHochschild);
    if (f == "koszul_hc") return koszul_dual(to_tri(eval(*a[0])), DualityRemap::kCyclic);
    if (f == "diag") return diag_hh(to_tri(eval(*a[0])));
    if (f == "slice") {
      TriSeries t = to_tri(eval(*a[0]));
      return t.slice(int_arg(*a[1], 0, t.trunc()));
    }
    Preset p;
    if (f.rfind("exceptional_", 0) == 0) {
      p.name = "exceptional";
      p.variant = f.substr(12);
    } else {
      p.name = f;
    }
    for (const auto& arg : a) p.params.push_back(int_arg(*arg, 0, 1000));
    return predict(p, trunc_);
  }

  int trunc_;
};

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string render(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::kNumber:
    case K::kSymbol:
      return e.text;
    case K::kNeg:
      return "-" + wrap(*e.args[0], 3);
    case K::kAdd:
      return wrap(*e.args[0], 1) + " + " + wrap(*e.args[1], 2);
    case K::kSub:
      return wrap(*e.args[0], 1) + " - " + wrap(*e.args[1], 2);
    case K::kMul:
      return wrap(*e.args[0], 2) + "*" + wrap(*e.args[1], 3);
    case K::kDiv:
      return wrap(*e.args[0], 2) + "/" + wrap(*e.args[1], 3);
    case K::kPow:
      return wrap(*e.args[0], 5) + "^" + wrap(*e.args[1], 3);
    case K::kCall: {
      std::string s = e.text + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + render(*e.args[i]);
      return s + ")";
    }
  }
  return {};
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_tree(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

Value evaluate(const Expr& e, int trunc) {
  if (trunc < 0) throw DomainError("truncation must be nonnegative");
  return Evaluator(trunc).eval(e);
}

Value evaluate(const std::string& text, int trunc) { return evaluate(*parse(text), trunc); }

std::vector<std::pair<std::string, std::string>> function_signatures() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, f] : functions()) out.emplace_back(name, f.help);
  out.emplace_back("subst_k", "subst_k(f): shorthand for subst(f, k)");
  return out;
}

}  // namespace cychom
