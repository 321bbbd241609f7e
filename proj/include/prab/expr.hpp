#pragma once

#include <functional>
#include <memory>
#include <string>

namespace prab {

// Small arithmetic expressions in t and x for user-configured problem data:
// numbers, pi, t, x, + - * / ^, unary minus, and sin cos tan exp log sqrt abs.
class Expr {
 public:
  static Expr parse(const std::string& text);

  double operator()(double t, double x) const;
  // True when the expression is a literal zero, so the term can be skipped entirely.
  bool is_zero() const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace prab
