#pragma once

// Expression trees for user-supplied functions of t on (0,1).
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := unary ('^' factor)?
//   unary  := '-'? atom
//   atom   := number | 't' | 'pi' | ident '(' expr ')' | '(' expr ')'
//
// '^' binds to the unary on its left, so "-t^2" is (-t)^2.

#include <memory>
#include <string>
#include <string_view>

#include "mst/error.hpp"
#include "mst/quadrature.hpp"

namespace mst::expr {

enum class Op { Const, VarT, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class Fn { Sqrt, Log, Exp, Sin, Cos, Abs };

std::string_view to_string(Fn fn) noexcept;

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::Const;
  /// Const only. `is_pi` marks the literal `pi`.
  double value = 0.0;
  bool is_pi = false;
  /// Call only.
  Fn fn = Fn::Sqrt;
  /// Neg and Call use `lhs` alone.
  NodePtr lhs;
  NodePtr rhs;
};

/// SyntaxError or UnknownFunction, with the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t offset, const std::string& what)
      : Error(code, what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class Expr {
 public:
  Expr() = default;
  explicit Expr(NodePtr root) : root_(std::move(root)) {}

  const Node& root() const { return *root_; }
  const NodePtr& ptr() const noexcept { return root_; }

  /// Value at t with 1 - t supplied separately; the subtree `1 - t` evaluates
  /// to `one_minus_t`. Non-finite results raise EvalError.
  double eval(double t, double one_minus_t) const;
  double eval(double t) const { return eval(t, 1.0 - t); }

  /// d/dt, lightly simplified.
  Expr derivative() const;

  /// Canonical text; parse(to_string()) reproduces the tree.
  std::string to_string() const;

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  NodePtr root_;
};

Expr parse(std::string_view src);

/// A FuncSpec backed by `e`, with the symbolic derivative attached.
FuncSpec to_func_spec(const Expr& e, double sing_left = 0.0, double sing_right = 0.0);

}  // namespace mst::expr
