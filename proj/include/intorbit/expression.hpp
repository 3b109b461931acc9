#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "intorbit/decimal.hpp"
#include "intorbit/interval.hpp"

namespace intorbit {

enum class Variable { x, r };
enum class BinaryOp { add, sub, mul, div };

struct ExprNode;

/// One written form of a map f(x; r), parsed without any algebraic
/// rewriting. Distinct but equivalent forms stay distinct trees, which is
/// what makes their interval evaluations differ.
///
/// Grammar (binaries are left-associative):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := ['-'] atom ['^' integer]
///   atom   := number | 'x' | 'r' | '(' expr ')'
///
/// Cheap to copy; the node tree is shared and immutable.
class ExtensionExpr {
 public:
  /// Throws ParseError (with the offending position).
  static ExtensionExpr parse(std::string_view text);

  /// Text with the minimal parentheses that preserve the tree shape.
  std::string render() const;
  const std::string& source() const noexcept { return source_; }
  const ExprNode& root() const noexcept { return *root_; }

  friend bool operator==(const ExtensionExpr& a, const ExtensionExpr& b);

 private:
  ExtensionExpr(std::string source, std::shared_ptr<const ExprNode> root)
      : source_(std::move(source)), root_(std::move(root)) {}

  std::string source_;
  std::shared_ptr<const ExprNode> root_;
};

inline ExtensionExpr parse_extension(std::string_view text) { return ExtensionExpr::parse(text); }

struct IntervalBindings {
  Interval x;
  Interval r;
};

struct FloatBindings {
  double x = 0.0;
  double r = 0.0;
};

struct EvalOptions {
  Rounding rounding = Rounding::directed;
  /// How numeric literals in the expression are enclosed.
  EnclosureMode literals = EnclosureMode::Thin;
};

/// Node-by-node interval evaluation in tree order. `x^k` goes through
/// pow_int; write `x*x` to get the plain product instead.
Interval eval_interval(const ExtensionExpr& e, const IntervalBindings& b, const EvalOptions& opts = {});

/// Plain binary64 evaluation, one rounding per operation, no contraction.
double eval_float(const ExtensionExpr& e, const FloatBindings& b);

// Node representation, exposed for structural inspection in tests and tools.
enum class NodeKind { constant, variable, negate, binary, power };

struct ExprNode {
  NodeKind kind = NodeKind::constant;
  // constant
  std::string literal;
  double nearest = 0.0;
  Interval thin, pair, tight;
  // variable
  Variable var = Variable::x;
  // negate / binary / power
  BinaryOp op = BinaryOp::add;
  std::shared_ptr<const ExprNode> lhs;  // operand for negate and power
  std::shared_ptr<const ExprNode> rhs;
  unsigned exponent = 0;
};

bool structurally_equal(const ExprNode& a, const ExprNode& b);

}  // namespace intorbit
