#pragma once

// Arithmetic expressions over scalars and bilinear forms, used by the orbit
// recipe format. Supports + - * / ^ (integer exponent), parentheses, unary
// minus and implicit multiplication (`2 N1`, `a1 x^2`).

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "zinbiel/cohomology.hpp"

namespace zinbiel {

struct Value {
  bool is_form = false;
  FieldElement scalar;
  BilinearForm form;

  static Value of(FieldElement s) { return {false, std::move(s), {}}; }
  static Value of(BilinearForm f) { return {true, {}, std::move(f)}; }
  const FieldElement& as_scalar() const;
  const BilinearForm& as_form() const;
};

/// Name lookup; returning nullopt makes evaluation fail with "unknown symbol".
using Resolver = std::function<std::optional<Value>(const std::string&)>;

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Expr {
 public:
  static Expr parse(std::string_view text);
  Value evaluate(const Resolver& resolve) const;
  FieldElement evaluate_scalar(const Resolver& resolve) const { return evaluate(resolve).as_scalar(); }
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace zinbiel
