#include "intorbit/expression.hpp"

#include <cctype>
#include <utility>

#include "intorbit/errors.hpp"

namespace intorbit {
namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

std::shared_ptr<ExprNode> make_node(NodeKind kind) {
  auto node = std::make_shared<ExprNode>();
  node->kind = kind;
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      lhs = binary(c == '+' ? BinaryOp::add : BinaryOp::sub, std::move(lhs), term());
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      ++pos_;
      lhs = binary(c == '*' ? BinaryOp::mul : BinaryOp::div, std::move(lhs), factor());
    }
    return lhs;
  }

  NodePtr factor() {
    const bool negate = peek() == '-';
    if (negate) ++pos_;
    NodePtr node = atom();
    if (peek() == '^') {
      ++pos_;
      const unsigned k = integer_exponent();
      auto pow = make_node(NodeKind::power);
      pow->lhs = std::move(node);
      pow->exponent = k;
      node = std::move(pow);
    }
    if (negate) {
      auto neg = make_node(NodeKind::negate);
      neg->lhs = std::move(node);
      node = std::move(neg);
    }
    return node;
  }

  unsigned integer_exponent() {
    const char c = peek();
    if (c == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected integer exponent");
    const std::size_t start = pos_;
    unsigned long k = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      k = k * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (k > 1024) {
        pos_ = start;
        fail("exponent too large");
      }
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      fail("non-integer exponent");
    }
    return static_cast<unsigned>(k);
  }

  NodePtr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      auto node = make_node(NodeKind::variable);
      if (name == "x") {
        node->var = Variable::x;
      } else if (name == "r") {
        node->var = Variable::r;
      } else {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      return node;
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      digits();
    }
    auto node = make_node(NodeKind::constant);
    node->literal = std::string(text_.substr(start, pos_ - start));
    try {
      node->nearest = nearest_double(node->literal);
      node->thin = enclose_decimal(node->literal, EnclosureMode::Thin);
      node->pair = enclose_decimal(node->literal, EnclosureMode::NeighborPair);
      node->tight = enclose_decimal(node->literal, EnclosureMode::Tight);
    } catch (const DecimalError&) {
      pos_ = start;
      fail("malformed number '" + node->literal + "'");
    }
    return node;
  }

  static NodePtr binary(BinaryOp op, NodePtr lhs, NodePtr rhs) {
    auto node = make_node(NodeKind::binary);
    node->op = op;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength used by the renderer.
int precedence(const ExprNode& n) {
  switch (n.kind) {
    case NodeKind::binary:
      return (n.op == BinaryOp::add || n.op == BinaryOp::sub) ? 1 : 2;
    case NodeKind::negate:
      return 3;
    case NodeKind::power:
      return 4;
    default:
      return 5;
  }
}

char op_char(BinaryOp op) {
  switch (op) {
    case BinaryOp::add:
      return '+';
    case BinaryOp::sub:
      return '-';
    case BinaryOp::mul:
      return '*';
    case BinaryOp::div:
      return '/';
  }
  return '?';
}

void render(const ExprNode& n, std::string& out);

void render_wrapped(const ExprNode& n, bool wrap, std::string& out) {
  if (wrap) out += '(';
  render(n, out);
  if (wrap) out += ')';
}

void render(const ExprNode& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::constant:
      out += n.literal;
      return;
    case NodeKind::variable:
      out += n.var == Variable::x ? 'x' : 'r';
      return;
    case NodeKind::negate:
      out += '-';
      render_wrapped(*n.lhs, precedence(*n.lhs) < 4, out);
      return;
    case NodeKind::power:
      render_wrapped(*n.lhs, precedence(*n.lhs) < 5, out);
      out += '^';
      out += std::to_string(n.exponent);
      return;
    case NodeKind::binary: {
      const int p = precedence(n);
      render_wrapped(*n.lhs, precedence(*n.lhs) < p, out);
      out += op_char(n.op);
      // Right operands of a left-associative chain keep their parentheses:
      // r*(x*(1-x)) must not collapse into r*x*(1-x).
      const int rp = precedence(*n.rhs);
      render_wrapped(*n.rhs, rp <= p && n.rhs->kind == NodeKind::binary, out);
      return;
    }
  }
}

Interval eval(const ExprNode& n, const IntervalBindings& b, const EvalOptions& opts) {
  switch (n.kind) {
    case NodeKind::constant:
      switch (opts.literals) {
        case EnclosureMode::Thin:
          return n.thin;
        case EnclosureMode::NeighborPair:
          return n.pair;
        case EnclosureMode::Tight:
          return n.tight;
      }
      return n.thin;
    case NodeKind::variable:
      return n.var == Variable::x ? b.x : b.r;
    case NodeKind::negate:
      return neg(eval(*n.lhs, b, opts));
    case NodeKind::power:
      return pow_int(eval(*n.lhs, b, opts), n.exponent, opts.rounding);
    case NodeKind::binary: {
      const Interval l = eval(*n.lhs, b, opts);
      const Interval r = eval(*n.rhs, b, opts);
      switch (n.op) {
        case BinaryOp::add:
          return add(l, r, opts.rounding);
        case BinaryOp::sub:
          return sub(l, r, opts.rounding);
        case BinaryOp::mul:
          return mul(l, r, opts.rounding);
        case BinaryOp::div:
          return div(l, r, opts.rounding);
      }
    }
  }
  return {};
}

double eval(const ExprNode& n, const FloatBindings& b) {
  switch (n.kind) {
    case NodeKind::constant:
      return n.nearest;
    case NodeKind::variable:
      return n.var == Variable::x ? b.x : b.r;
    case NodeKind::negate:
      return -eval(*n.lhs, b);
    case NodeKind::power: {
      const double base = eval(*n.lhs, b);
      if (n.exponent == 0) return 1.0;
      double acc = base;
      for (unsigned i = 1; i < n.exponent; ++i) acc *= base;
      return acc;
    }
    case NodeKind::binary: {
      const double l = eval(*n.lhs, b);
      const double r = eval(*n.rhs, b);
      switch (n.op) {
        case BinaryOp::add:
          return l + r;
        case BinaryOp::sub:
          return l - r;
        case BinaryOp::mul:
          return l * r;
        case BinaryOp::div:
          return l / r;
      }
    }
  }
  return 0.0;
}

}  // namespace

ExtensionExpr ExtensionExpr::parse(std::string_view text) {
  return ExtensionExpr(std::string(text), Parser(text).parse());
}

std::string ExtensionExpr::render() const {
  std::string out;
  intorbit::render(*root_, out);
  return out;
}

bool operator==(const ExtensionExpr& a, const ExtensionExpr& b) {
  return structurally_equal(*a.root_, *b.root_);
}

bool structurally_equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::constant:
      return a.literal == b.literal;
    case NodeKind::variable:
      return a.var == b.var;
    case NodeKind::negate:
      return structurally_equal(*a.lhs, *b.lhs);
    case NodeKind::power:
      return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    case NodeKind::binary:
      return a.op == b.op && structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
  return false;
}

Interval eval_interval(const ExtensionExpr& e, const IntervalBindings& b, const EvalOptions& opts) {
  return eval(e.root(), b, opts);
}

double eval_float(const ExtensionExpr& e, const FloatBindings& b) { return eval(e.root(), b); }

}  // namespace intorbit
