#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace wlcull {

enum class BinaryOp { Add, Sub, Mul, Div };

// Arithmetic over event names: identifiers, numeric literals, binary + - * /,
// unary minus, parentheses. Standard precedence, left associative. That is
// all a derived-metric definition ever needs (ratios, differences, scaling).
//
// The tree is immutable after parse; copies share it, so Expression values
// are cheap and safe to read from concurrent tasks.
class Expression {
public:
  struct Node;
  using NodeRef = std::shared_ptr<const Node>;

  struct Node {
    enum class Kind { Literal, Identifier, Negate, Binary };
    Kind kind;
    double value = 0.0;   // Literal
    std::string name;     // Identifier
    BinaryOp op{};        // Binary
    NodeRef lhs;          // Binary lhs, Negate operand
    NodeRef rhs;          // Binary rhs
  };

  // Throws ParseError (with byte offset) on malformed or empty input.
  static Expression parse(std::string_view text);

  // Throws DataError naming the identifier if one is unbound, or naming the
  // offending subexpression on division by zero.
  double evaluate(const std::map<std::string, double>& bindings) const;

  // Minimal parentheses; re-parsing the result reproduces this tree.
  std::string pretty() const;

  std::set<std::string> identifiers() const;

  bool operator==(const Expression& other) const;
  bool operator!=(const Expression& other) const { return !(*this == other); }

  const NodeRef& root() const noexcept { return root_; }

private:
  explicit Expression(NodeRef root) : root_(std::move(root)) {}
  NodeRef root_;
};

}  // namespace wlcull
