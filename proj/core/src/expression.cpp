#include "wlcull/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "wlcull/error.hpp"
#include "wlcull/numformat.hpp"

namespace wlcull {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Recursive descent with the usual two precedence levels.
//
//   expr := term (('+' | '-') term)*
//   term := unary (('*' | '/') unary)*
//   unary := '-' unary | primary
//   primary := number | identifier | '(' expr ')'
class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression::NodeRef parse() {
    skip_space();
    if (pos_ >= text_.size()) {
      throw ParseError("empty expression", 0);
    }
    auto node = parse_expr();
    skip_space();
    if (pos_ < text_.size()) {
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return node;
  }

private:
  Expression::NodeRef parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) return lhs;
      char c = text_[pos_];
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      auto rhs = parse_term();
      lhs = make_binary(c == '+' ? BinaryOp::Add : BinaryOp::Sub, lhs, rhs);
    }
  }

  Expression::NodeRef parse_term() {
    auto lhs = parse_unary();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) return lhs;
      char c = text_[pos_];
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      auto rhs = parse_unary();
      lhs = make_binary(c == '*' ? BinaryOp::Mul : BinaryOp::Div, lhs, rhs);
    }
  }

  Expression::NodeRef parse_unary() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      std::size_t at = pos_;
      ++pos_;
      auto operand = parse_unary();
      (void)at;
      auto node = std::make_shared<Expression::Node>();
      node->kind = Expression::Node::Kind::Negate;
      node->lhs = std::move(operand);
      return node;
    }
    return parse_primary();
  }

  Expression::NodeRef parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) {
      throw ParseError("expected operand at end of input", pos_);
    }
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      auto inner = parse_expr();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("unterminated parenthesis", open);
      }
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      auto node = std::make_shared<Expression::Node>();
      node->kind = Expression::Node::Kind::Identifier;
      node->name = std::string(text_.substr(start, pos_ - start));
      return node;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Expression::NodeRef parse_number() {
    std::size_t start = pos_;
    // Let from_chars find the longest valid double, scientific form included.
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) {
      throw ParseError("malformed number", start);
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    auto node = std::make_shared<Expression::Node>();
    node->kind = Expression::Node::Kind::Literal;
    node->value = value;
    return node;
  }

  static Expression::NodeRef make_binary(BinaryOp op, Expression::NodeRef lhs,
                                         Expression::NodeRef rhs) {
    auto node = std::make_shared<Expression::Node>();
    node->kind = Expression::Node::Kind::Binary;
    node->op = op;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Expression::Node& node) {
  switch (node.kind) {
    case Expression::Node::Kind::Literal:
    case Expression::Node::Kind::Identifier:
      return 3;
    case Expression::Node::Kind::Negate:
      return 2;
    case Expression::Node::Kind::Binary:
      return (node.op == BinaryOp::Mul || node.op == BinaryOp::Div) ? 1 : 0;
  }
  return 3;
}

void print_node(const Expression::Node& node, std::string& out);

void print_child(const Expression::Node& child, int parent_prec, bool is_right,
                 std::string& out) {
  int child_prec = precedence(child);
  // Parenthesize when the child binds weaker, or equally on the right of a
  // left-associative operator: a - (b - c) must keep its parens.
  bool parens = child_prec < parent_prec || (child_prec == parent_prec && is_right);
  if (parens) out += '(';
  print_node(child, out);
  if (parens) out += ')';
}

void print_node(const Expression::Node& node, std::string& out) {
  switch (node.kind) {
    case Expression::Node::Kind::Literal:
      out += format_double(node.value);
      return;
    case Expression::Node::Kind::Identifier:
      out += node.name;
      return;
    case Expression::Node::Kind::Negate: {
      out += '-';
      // -(a + b) and -(a * b) need parens; --a needs them too, or the
      // re-parse of "--a" would fail to see two unary nodes. Keep the operand
      // wrapped unless it is atomic.
      bool parens = precedence(*node.lhs) < 3;
      if (parens) out += '(';
      print_node(*node.lhs, out);
      if (parens) out += ')';
      return;
    }
    case Expression::Node::Kind::Binary: {
      int prec = precedence(node);
      print_child(*node.lhs, prec, false, out);
      switch (node.op) {
        case BinaryOp::Add: out += " + "; break;
        case BinaryOp::Sub: out += " - "; break;
        case BinaryOp::Mul: out += " * "; break;
        case BinaryOp::Div: out += " / "; break;
      }
      print_child(*node.rhs, prec, true, out);
      return;
    }
  }
}

double eval_node(const Expression::Node& node,
                 const std::map<std::string, double>& bindings) {
  switch (node.kind) {
    case Expression::Node::Kind::Literal:
      return node.value;
    case Expression::Node::Kind::Identifier: {
      auto it = bindings.find(node.name);
      if (it == bindings.end()) {
        throw DataError("unbound identifier '" + node.name + "'");
      }
      return it->second;
    }
    case Expression::Node::Kind::Negate:
      return -eval_node(*node.lhs, bindings);
    case Expression::Node::Kind::Binary: {
      double lhs = eval_node(*node.lhs, bindings);
      double rhs = eval_node(*node.rhs, bindings);
      switch (node.op) {
        case BinaryOp::Add: return lhs + rhs;
        case BinaryOp::Sub: return lhs - rhs;
        case BinaryOp::Mul: return lhs * rhs;
        case BinaryOp::Div:
          if (rhs == 0.0) {
            std::string text;
            print_node(node, text);
            throw DataError("division by zero in '" + text + "'");
          }
          return lhs / rhs;
      }
      return 0.0;
    }
  }
  return 0.0;
}

void collect_identifiers(const Expression::Node& node, std::set<std::string>& out) {
  switch (node.kind) {
    case Expression::Node::Kind::Identifier:
      out.insert(node.name);
      return;
    case Expression::Node::Kind::Negate:
      collect_identifiers(*node.lhs, out);
      return;
    case Expression::Node::Kind::Binary:
      collect_identifiers(*node.lhs, out);
      collect_identifiers(*node.rhs, out);
      return;
    case Expression::Node::Kind::Literal:
      return;
  }
}

bool nodes_equal(const Expression::Node& a, const Expression::Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expression::Node::Kind::Literal:
      return a.value == b.value;
    case Expression::Node::Kind::Identifier:
      return a.name == b.name;
    case Expression::Node::Kind::Negate:
      return nodes_equal(*a.lhs, *b.lhs);
    case Expression::Node::Kind::Binary:
      return a.op == b.op && nodes_equal(*a.lhs, *b.lhs) &&
             nodes_equal(*a.rhs, *b.rhs);
  }
  return false;
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Parser parser(text);
  return Expression(parser.parse());
}

double Expression::evaluate(const std::map<std::string, double>& bindings) const {
  return eval_node(*root_, bindings);
}

std::string Expression::pretty() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

std::set<std::string> Expression::identifiers() const {
  std::set<std::string> out;
  collect_identifiers(*root_, out);
  return out;
}

bool Expression::operator==(const Expression& other) const {
  return nodes_equal(*root_, *other.root_);
}

}  // namespace wlcull
