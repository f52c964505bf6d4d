#include <doctest.h>

#include <random>

#include "cychom/calculus.hpp"
#include "cychom/expr.hpp"
#include "cychom/transforms.hpp"

using namespace cychom;

namespace {

SignedSeries sig(const std::string& text, int trunc) { return std::get<SignedSeries>(evaluate(text, trunc)); }
TriSeries tri(const std::string& text, int trunc) { return std::get<TriSeries>(evaluate(text, trunc)); }

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for " << text);
  return ParseError("", 0, 0, 0);
}

std::string random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
  std::uniform_int_distribution<int> small(1, 4);
  switch (pick(rng)) {
    case 0: return std::to_string(small(rng));
    case 1: return "z";
    case 2: return "y*z";
    case 3: return random_expr(rng, depth - 1) + " + " + random_expr(rng, depth - 1);
    case 4: return random_expr(rng, depth - 1) + " - " + random_expr(rng, depth - 1);
    case 5: return "(" + random_expr(rng, depth - 1) + ")*(" + random_expr(rng, depth - 1) + ")";
    case 6: return "-(" + random_expr(rng, depth - 1) + ")";
    case 7: return "(" + random_expr(rng, depth - 1) + ")^" + std::to_string(small(rng) % 3);
    case 8: return "subst(" + random_expr(rng, depth - 1) + ", 2)";
    default: return "hcfree(z*(" + random_expr(rng, depth - 1) + " - " + random_expr(rng, depth - 1) + "))";
  }
}

}  // namespace

TEST_CASE("parse errors carry positions") {
  auto e = parse_error("hcfree(");
  CHECK(e.offset == 7);
  CHECK(e.line == 1);
  CHECK(e.column == 8);
  CHECK(std::string(e.what()).find("offset 7") != std::string::npos);

  e = parse_error("z +\n  * y");
  CHECK(e.line == 2);
  CHECK(e.column == 3);

  e = parse_error("z + w");
  CHECK(e.offset == 4);
  CHECK(e.message.find("unknown symbol") != std::string::npos);

  e = parse_error("foo(z)");
  CHECK(e.offset == 0);
  CHECK(e.message.find("unknown function") != std::string::npos);

  e = parse_error("hcfree(z, y)");
  CHECK(e.message.find("takes 1") != std::string::npos);

  CHECK(parse_error("(z").message.find("')'") != std::string::npos);
  CHECK(parse_error("z )").offset == 2);
  CHECK(parse_error("").offset == 0);
  CHECK(parse_error("hcfree").message.find("needs arguments") != std::string::npos);
}

TEST_CASE("rendering") {
  CHECK(render(*parse("1 - (z - y)")) == "1 - (z - y)");
  CHECK(render(*parse("(1 - z) - y")) == "1 - z - y");
  CHECK(render(*parse("(z*y)*z")) == "z*y*z");
  CHECK(render(*parse("z*(y*z)")) == "z*(y*z)");
  CHECK(render(*parse("-z^2")) == "-z^2");
  CHECK(render(*parse("(-z)^2")) == "(-z)^2");
  CHECK(render(*parse("z^(2^2)")) == "z^2^2");
  CHECK(render(*parse("z / (y / z)")) == "z/(y/z)");
  CHECK(render(*parse("hcfree( 7*y*z-3*z^2 )")) == "hcfree(7*y*z - 3*z^2)");
}

TEST_CASE("render is a parse fixed point") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const std::string text = random_expr(rng, 4);
    const ExprPtr e = parse(text);
    const std::string once = render(*e);
    const ExprPtr back = parse(once);
    CHECK(same_tree(*e, *back));
    CHECK(render(*back) == once);
  }
}

TEST_CASE("evaluation") {
  CHECK(render(sig("hcfree(7*y*z - 3*z^2)", 5)) == "7*y*z + 18*z^2 + 98*y*z^3 + 465*z^4 + 2401*y*z^5");
  CHECK(sig("1/(1 - z)", 6) == invert(SignedSeries::one(6) - SignedSeries::monomial(6, 1, 0)));
  CHECK(sig("inv(1 - 2*z)", 4).even(4) == 16);
  CHECK(sig("(1 - z)^-2", 5).even(5) == 6);
  CHECK(sig("y*y", 3) == SignedSeries::one(3));
  CHECK(sig("z/2", 3).even(1) == Rational(1, 2));
  CHECK(sig("subst(z + y*z^2, 2)", 6) == sig("z^2 - z^4", 6));
  CHECK(sig("subst(z + y*z, 3)", 6) == sig("z^3 + y*z^3", 6));
  CHECK(sig("subst_3(y*z)", 6) == sig("y*z^3", 6));
  CHECK(sig("S(z)", 5) == sig("1/(1-z)", 5));
  CHECK(sig("lie(1/(1-2*z))", 5).even(5) == 6);
  CHECK(sig("exp(log(1 + z))", 6) == sig("1 + z", 6));
  CHECK(tri("hkr(2)", 5) == hkr(2, 5));
  CHECK(tri("koszul_hh(hkr(2))", 5) == exterior_hh(2, 5));
  CHECK(tri("hc_from_hh(hh_from_hc(exceptional_B0(3)))", 6) == predict(Preset{"exceptional", {3}, "B0"}, 6));
  CHECK(sig("slice(x*z + 3*x*y*z^2, 1)", 3) == sig("z + 3*y*z^2", 3));
  CHECK(sig("diag(hkr(2))", 5) == sig("(1 + y*z)^2", 5));
  CHECK(tri("generic_symmetric(3)", 6) == predict(Preset{"generic_symmetric", {3}, ""}, 6));
  CHECK(tri("polynomial_generic(7, 3, 1, 3)", 5) == predict(Preset{"polynomial_generic", {7, 3, 1, 3}, ""}, 5));
  CHECK(std::holds_alternative<TriSeries>(evaluate("1 + x*y*z", 3)));
}

TEST_CASE("evaluation errors") {
  auto span_of = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      evaluate(text, 5);
    } catch (const EvalError& e) {
      return {e.offset, e.length};
    }
    return {999, 999};
  };
  CHECK(span_of("1/z") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(span_of("z + hcfree(1)").first == 4);
  CHECK(span_of("hcfree(x*z)").first == 7);
  CHECK(span_of("subst(z, 0)").first == 9);
  CHECK(span_of("z^5000").first == 2);
  CHECK(span_of("S(z/2)").first == 0);
  CHECK(span_of("generic_symmetric(2)").first == 0);
  CHECK_THROWS_AS(evaluate("z", -1), DomainError);
}

TEST_CASE("truncation is monotone") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 60; ++i) {
    const std::string text = random_expr(rng, 3);
    const Value hi = evaluate(text, 9);
    const Value lo = evaluate(text, 5);
    CHECK(std::get<SignedSeries>(hi).truncated(5) == std::get<SignedSeries>(lo));
    CHECK(std::get<SignedSeries>(evaluate(render(*parse(text)), 9)) == std::get<SignedSeries>(hi));
  }
  CHECK(tri("hkr(3)", 8).truncated(4) == tri("hkr(3)", 4));
}

TEST_CASE("function table") {
  const auto sigs = function_signatures();
  CHECK(sigs.size() >= 20);
  for (const auto& [name, help] : sigs) {
    CHECK(help.rfind(name, 0) == 0);
  }
}
