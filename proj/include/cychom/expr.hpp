#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cychom/error.hpp"
#include "cychom/series.hpp"

namespace cychom {

/// Syntax error with a 0-based byte offset and 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::size_t line, std::size_t column);
  std::size_t offset;
  std::size_t line;
  std::size_t column;
  std::string message;
};

/// Evaluation failure attributed to a source span.
class EvalError : public Error {
 public:
  EvalError(const std::string& message, std::size_t offset, std::size_t length);
  std::size_t offset;
  std::size_t length;
};

struct Expr {
  enum class Kind { kNumber, kSymbol, kNeg, kAdd, kSub, kMul, kDiv, kPow, kCall };

  Kind kind = Kind::kNumber;
  std::string text;  ///< digits, symbol name or function name
  std::vector<std::unique_ptr<Expr>> args;
  std::size_t offset = 0;
  std::size_t length = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

/// Grammar, loosest first:
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?
///   primary := integer | symbol | name '(' sum (',' sum)* ')' | '(' sum ')'
/// Symbols are z, y and x; x makes the expression three-variable.
ExprPtr parse(const std::string& text);

/// Canonical text with the minimal parentheses; parse(render(e)) reproduces e.
std::string render(const Expr& e);

/// Structural equality ignoring source positions.
bool same_tree(const Expr& a, const Expr& b);

using Value = std::variant<SignedSeries, TriSeries>;

/// Evaluates with every series truncated at weight `trunc`.
Value evaluate(const Expr& e, int trunc);
Value evaluate(const std::string& text, int trunc);

/// Names accepted in function position, with a short signature each.
std::vector<std::pair<std::string, std::string>> function_signatures();

}  // namespace cychom
