#include "mst/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

namespace mst::expr {

namespace {

constexpr std::array<std::pair<std::string_view, Fn>, 6> kFunctions{{
    {"sqrt", Fn::Sqrt},
    {"log", Fn::Log},
    {"exp", Fn::Exp},
    {"sin", Fn::Sin},
    {"cos", Fn::Cos},
    {"abs", Fn::Abs},
}};

NodePtr make_const(double v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = v;
  return n;
}

NodePtr make_pi() {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = std::numbers::pi;
  n->is_pi = true;
  return n;
}

NodePtr make_var() {
  auto n = std::make_shared<Node>();
  n->op = Op::VarT;
  return n;
}

NodePtr make_unary(Op op, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(a);
  return n;
}

NodePtr make_call(Fn fn, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->op = Op::Call;
  n->fn = fn;
  n->lhs = std::move(a);
  return n;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

bool is_one_minus_t(const Node& n) {
  return n.op == Op::Sub && n.lhs->op == Op::Const && !n.lhs->is_pi && n.lhs->value == 1.0 &&
         n.rhs->op == Op::VarT;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse_all() {
    skip_ws();
    if (pos_ == src_.size()) fail("empty expression");
    NodePtr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(ErrorCode::SyntaxError, pos_, what); }

  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r'))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = make_binary(Op::Add, lhs, parse_term());
      } else if (accept('-')) {
        lhs = make_binary(Op::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      if (accept('*')) {
        lhs = make_binary(Op::Mul, lhs, parse_factor());
      } else if (accept('/')) {
        lhs = make_binary(Op::Div, lhs, parse_factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_factor() {
    NodePtr base = parse_unary();
    if (accept('^')) return make_binary(Op::Pow, base, parse_factor());
    return base;
  }

  NodePtr parse_unary() {
    if (accept('-')) {
      NodePtr a = parse_atom();
      if (a->op == Op::Const && !a->is_pi) return make_const(-a->value);
      return make_unary(Op::Neg, a);
    }
    return parse_atom();
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos_ == src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = parse_expr();
      expect(')');
      return e;
    }
    if ((c >= '0' && c <= '9') || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t n = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail("malformed exponent");
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (ec != std::errc{} || ptr != src_.data() + pos_ || !std::isfinite(v)) {
      pos_ = start;
      fail("number out of range");
    }
    return make_const(v);
  }

  NodePtr parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "t") return make_var();
    if (name == "pi") return make_pi();
    skip_ws();
    if (pos_ == src_.size() || src_[pos_] != '(') {
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    for (const auto& [fname, fn] : kFunctions) {
      if (fname == name) {
        ++pos_;
        NodePtr arg = parse_expr();
        expect(')');
        return make_call(fn, arg);
      }
    }
    throw ParseError(ErrorCode::UnknownFunction, start, "unknown function '" + std::string(name) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- printer

// Grammar levels: 1 expr, 2 term, 3 factor, 4 unary, 5 atom.
int level(const Node& n) {
  switch (n.op) {
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    case Op::Pow:
      return 3;
    case Op::Neg:
      return 4;
    case Op::Const:
      return std::signbit(n.value) && !n.is_pi ? 4 : 5;
    default:
      return 5;
  }
}

std::string format_number(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void print(const Node& n, int min_level, std::string& out) {
  const bool parens = level(n) < min_level;
  if (parens) out += '(';
  switch (n.op) {
    case Op::Const:
      if (n.is_pi) {
        out += "pi";
      } else if (std::signbit(n.value)) {
        out += '-';
        out += format_number(-n.value);
      } else {
        out += format_number(n.value);
      }
      break;
    case Op::VarT:
      out += 't';
      break;
    case Op::Neg:
      out += '-';
      print(*n.lhs, 5, out);
      break;
    case Op::Add:
    case Op::Sub:
      print(*n.lhs, 1, out);
      out += n.op == Op::Add ? " + " : " - ";
      print(*n.rhs, 2, out);
      break;
    case Op::Mul:
    case Op::Div:
      print(*n.lhs, 2, out);
      out += n.op == Op::Mul ? "*" : "/";
      print(*n.rhs, 3, out);
      break;
    case Op::Pow:
      print(*n.lhs, 4, out);
      out += '^';
      print(*n.rhs, 3, out);
      break;
    case Op::Call:
      out += to_string(n.fn);
      out += '(';
      print(*n.lhs, 1, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

// ---------------------------------------------------------------- evaluation

double eval_node(const Node& n, double t, double tc) {
  switch (n.op) {
    case Op::Const:
      return n.value;
    case Op::VarT:
      return t;
    case Op::Neg:
      return -eval_node(*n.lhs, t, tc);
    case Op::Add:
      return eval_node(*n.lhs, t, tc) + eval_node(*n.rhs, t, tc);
    case Op::Sub:
      if (is_one_minus_t(n)) return tc;
      return eval_node(*n.lhs, t, tc) - eval_node(*n.rhs, t, tc);
    case Op::Mul:
      return eval_node(*n.lhs, t, tc) * eval_node(*n.rhs, t, tc);
    case Op::Div:
      return eval_node(*n.lhs, t, tc) / eval_node(*n.rhs, t, tc);
    case Op::Pow:
      return std::pow(eval_node(*n.lhs, t, tc), eval_node(*n.rhs, t, tc));
    case Op::Call: {
      const double a = eval_node(*n.lhs, t, tc);
      switch (n.fn) {
        case Fn::Sqrt:
          return std::sqrt(a);
        case Fn::Log:
          return std::log(a);
        case Fn::Exp:
          return std::exp(a);
        case Fn::Sin:
          return std::sin(a);
        case Fn::Cos:
          return std::cos(a);
        case Fn::Abs:
          return std::abs(a);
      }
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------- derivative

bool is_const(const NodePtr& n, double v) { return n->op == Op::Const && !n->is_pi && n->value == v; }
bool has_t(const Node& n) {
  if (n.op == Op::VarT) return true;
  return (n.lhs && has_t(*n.lhs)) || (n.rhs && has_t(*n.rhs));
}

NodePtr add(NodePtr a, NodePtr b) {
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  return make_binary(Op::Add, std::move(a), std::move(b));
}

NodePtr sub(NodePtr a, NodePtr b) {
  if (is_const(b, 0.0)) return a;
  if (is_const(a, 0.0)) return b->op == Op::Const && !b->is_pi ? make_const(-b->value) : make_unary(Op::Neg, b);
  return make_binary(Op::Sub, std::move(a), std::move(b));
}

NodePtr mul(NodePtr a, NodePtr b) {
  if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  return make_binary(Op::Mul, std::move(a), std::move(b));
}

NodePtr div(NodePtr a, NodePtr b) {
  if (is_const(a, 0.0)) return make_const(0.0);
  if (is_const(b, 1.0)) return a;
  return make_binary(Op::Div, std::move(a), std::move(b));
}

NodePtr neg(NodePtr a) {
  if (a->op == Op::Const && !a->is_pi) return make_const(-a->value);
  return make_unary(Op::Neg, std::move(a));
}

NodePtr diff(const NodePtr& n) {
  if (!has_t(*n)) return make_const(0.0);
  const NodePtr& a = n->lhs;
  const NodePtr& b = n->rhs;
  switch (n->op) {
    case Op::Const:
      return make_const(0.0);
    case Op::VarT:
      return make_const(1.0);
    case Op::Neg:
      return neg(diff(a));
    case Op::Add:
      return add(diff(a), diff(b));
    case Op::Sub:
      return sub(diff(a), diff(b));
    case Op::Mul:
      return add(mul(diff(a), b), mul(a, diff(b)));
    case Op::Div:
      return div(sub(mul(diff(a), b), mul(a, diff(b))), make_binary(Op::Pow, b, make_const(2.0)));
    case Op::Pow:
      if (!has_t(*b)) {
        const NodePtr exponent = b->op == Op::Const && !b->is_pi ? make_const(b->value - 1.0)
                                                                  : make_binary(Op::Sub, b, make_const(1.0));
        return mul(mul(b, make_binary(Op::Pow, a, exponent)), diff(a));
      }
      return mul(n, add(mul(diff(b), make_call(Fn::Log, a)), div(mul(b, diff(a)), a)));
    case Op::Call: {
      const NodePtr da = diff(a);
      switch (n->fn) {
        case Fn::Sqrt:
          return div(da, mul(make_const(2.0), n));
        case Fn::Log:
          return div(da, a);
        case Fn::Exp:
          return mul(n, da);
        case Fn::Sin:
          return mul(make_call(Fn::Cos, a), da);
        case Fn::Cos:
          return neg(mul(make_call(Fn::Sin, a), da));
        case Fn::Abs:
          return mul(div(a, n), da);
      }
    }
  }
  return make_const(0.0);
}

bool equal(const Node& a, const Node& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case Op::Const:
      return a.is_pi == b.is_pi && a.value == b.value && std::signbit(a.value) == std::signbit(b.value);
    case Op::VarT:
      return true;
    case Op::Neg:
      return equal(*a.lhs, *b.lhs);
    case Op::Call:
      return a.fn == b.fn && equal(*a.lhs, *b.lhs);
    default:
      return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
}

}  // namespace

std::string_view to_string(Fn fn) noexcept {
  for (const auto& [name, f] : kFunctions)
    if (f == fn) return name;
  return "?";
}

double Expr::eval(double t, double one_minus_t) const {
  const double v = eval_node(*root_, t, one_minus_t);
  if (!std::isfinite(v))
    throw Error(ErrorCode::EvalError, to_string() + " is not finite at t = " + format_number(t));
  return v;
}

Expr Expr::derivative() const { return Expr(diff(root_)); }

std::string Expr::to_string() const {
  std::string out;
  print(*root_, 1, out);
  return out;
}

bool operator==(const Expr& a, const Expr& b) { return equal(*a.root_, *b.root_); }

Expr parse(std::string_view src) { return Expr(Parser(src).parse_all()); }

FuncSpec to_func_spec(const Expr& e, double sing_left, double sing_right) {
  FuncSpec f([e](double t, double tc) { return e.eval(t, tc); }, sing_left, sing_right, e.to_string());
  if (sing_left != 0.0 || sing_right != 0.0) return f;
  const Expr d = e.derivative();
  return f.with_derivative(FuncSpec([d](double t, double tc) { return d.eval(t, tc); }, 0.0, 0.0, d.to_string()));
}

}  // namespace mst::expr
