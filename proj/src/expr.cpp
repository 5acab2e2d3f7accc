#include "zinbiel/expr.hpp"

#include <cctype>
#include <vector>

namespace zinbiel {

const FieldElement& Value::as_scalar() const {
  if (is_form) throw EvalError("expected a scalar, got a form");
  return scalar;
}

const BilinearForm& Value::as_form() const {
  if (!is_form) throw EvalError("expected a form, got a scalar");
  return form;
}

struct Expr::Node {
  enum Kind { Number, Symbol, Add, Sub, Mul, Div, Pow, Neg } kind;
  Rational number;
  std::string name;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Expr::Node::Kind k, NodePtr a, NodePtr b = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse_all() {
    NodePtr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(s_) + "': " + what);
  }
  bool starts_primary() {
    const char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  NodePtr sum() {
    NodePtr e = product();
    for (;;) {
      if (accept('+')) e = make(Expr::Node::Add, e, product());
      else if (accept('-')) e = make(Expr::Node::Sub, e, product());
      else return e;
    }
  }

  NodePtr product() {
    NodePtr e = unary();
    for (;;) {
      if (accept('*')) e = make(Expr::Node::Mul, e, unary());
      else if (accept('/')) e = make(Expr::Node::Div, e, unary());
      else if (starts_primary()) e = make(Expr::Node::Mul, e, power());
      else return e;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Expr::Node::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Expr::Node::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    const char c = peek();
    if (accept('(')) {
      NodePtr e = sum();
      if (!accept(')')) fail("missing ')'");
      return e;
    }
    auto n = std::make_shared<Expr::Node>();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      n->kind = Expr::Node::Number;
      n->number = Rational::parse(s_.substr(start, pos_ - start));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      n->kind = Expr::Node::Symbol;
      n->name = std::string(s_.substr(start, pos_ - start));
      return n;
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

Value add(const Value& a, const Value& b, bool subtract) {
  if (a.is_form != b.is_form) throw EvalError("cannot add a scalar and a form");
  if (!a.is_form) return Value::of(subtract ? a.scalar - b.scalar : a.scalar + b.scalar);
  BilinearForm f = a.form;
  for (size_t i = 0; i < f.rows(); ++i)
    for (size_t j = 0; j < f.cols(); ++j) f(i, j) = subtract ? f(i, j) - b.form(i, j) : f(i, j) + b.form(i, j);
  return Value::of(std::move(f));
}

Value scale(const BilinearForm& f, const FieldElement& s) {
  BilinearForm out = f;
  for (size_t i = 0; i < out.rows(); ++i)
    for (size_t j = 0; j < out.cols(); ++j) out(i, j) *= s;
  return Value::of(std::move(out));
}

Value eval(const Expr::Node& n, const Resolver& resolve) {
  switch (n.kind) {
    case Expr::Node::Number:
      return Value::of(FieldElement(n.number));
    case Expr::Node::Symbol: {
      auto v = resolve(n.name);
      if (!v) throw EvalError("unknown symbol '" + n.name + "'");
      return *v;
    }
    case Expr::Node::Add:
      return add(eval(*n.lhs, resolve), eval(*n.rhs, resolve), false);
    case Expr::Node::Sub:
      return add(eval(*n.lhs, resolve), eval(*n.rhs, resolve), true);
    case Expr::Node::Neg: {
      const Value v = eval(*n.lhs, resolve);
      return v.is_form ? scale(v.form, FieldElement(-1)) : Value::of(-v.scalar);
    }
    case Expr::Node::Mul: {
      const Value a = eval(*n.lhs, resolve), b = eval(*n.rhs, resolve);
      if (a.is_form && b.is_form) throw EvalError("cannot multiply two forms");
      if (a.is_form) return scale(a.form, b.scalar);
      if (b.is_form) return scale(b.form, a.scalar);
      return Value::of(a.scalar * b.scalar);
    }
    case Expr::Node::Div: {
      const Value a = eval(*n.lhs, resolve);
      const FieldElement d = eval(*n.rhs, resolve).as_scalar();
      if (d.is_zero()) throw DivisionByZero();
      return a.is_form ? scale(a.form, d.inverse()) : Value::of(a.scalar / d);
    }
    case Expr::Node::Pow: {
      const FieldElement base = eval(*n.lhs, resolve).as_scalar();
      const FieldElement e = eval(*n.rhs, resolve).as_scalar();
      if (!e.is_rational() || !e.to_rational().is_integer()) throw EvalError("exponent must be an integer");
      const long k = std::stol(e.to_rational().numerator());
      return Value::of(base.pow(k));
    }
  }
  throw EvalError("corrupt expression");
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.root_ = Parser(text).parse_all();
  e.text_ = std::string(text);
  return e;
}

Value Expr::evaluate(const Resolver& resolve) const {
  if (!root_) throw EvalError("empty expression");
  return eval(*root_, resolve);
}

}  // namespace zinbiel
