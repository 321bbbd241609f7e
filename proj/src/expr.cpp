#include "prab/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "prab/error.hpp"

namespace prab {

struct Expr::Node {
  enum Kind { Num, VarT, VarX, Neg, Add, Sub, Mul, Div, Pow, Call } kind;
  double value = 0.0;
  double (*fn)(double) = nullptr;
  std::shared_ptr<const Node> lhs, rhs;

  double eval(double t, double x) const {
    switch (kind) {
      case Num: return value;
      case VarT: return t;
      case VarX: return x;
      case Neg: return -lhs->eval(t, x);
      case Add: return lhs->eval(t, x) + rhs->eval(t, x);
      case Sub: return lhs->eval(t, x) - rhs->eval(t, x);
      case Mul: return lhs->eval(t, x) * rhs->eval(t, x);
      case Div: return lhs->eval(t, x) / rhs->eval(t, x);
      case Pow: return std::pow(lhs->eval(t, x), rhs->eval(t, x));
      case Call: return fn(lhs->eval(t, x));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Expr::Node::Kind k, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::InvalidConfig,
                "expression '" + s + "': " + msg + " at offset " + std::to_string(pos));
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr l = term();
    for (;;) {
      if (eat('+')) l = make(Expr::Node::Add, l, term());
      else if (eat('-')) l = make(Expr::Node::Sub, l, term());
      else return l;
    }
  }
  NodePtr term() {
    NodePtr l = unary();
    for (;;) {
      if (eat('*')) l = make(Expr::Node::Mul, l, unary());
      else if (eat('/')) l = make(Expr::Node::Div, l, unary());
      else return l;
    }
  }
  NodePtr unary() {
    if (eat('-')) return make(Expr::Node::Neg, unary());
    if (eat('+')) return unary();
    return power();
  }
  NodePtr power() {
    NodePtr base = primary();
    if (eat('^')) return make(Expr::Node::Pow, base, unary());
    return base;
  }
  NodePtr primary() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    if (eat('(')) {
      NodePtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s.c_str() + pos;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) fail("bad number");
      pos += static_cast<std::size_t>(end - begin);
      auto n = std::make_shared<Expr::Node>();
      n->kind = Expr::Node::Num;
      n->value = v;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t b = pos;
      while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
      const std::string id = s.substr(b, pos - b);
      if (id == "t") return make(Expr::Node::VarT);
      if (id == "x") return make(Expr::Node::VarX);
      if (id == "pi") {
        auto n = std::make_shared<Expr::Node>();
        n->kind = Expr::Node::Num;
        n->value = std::numbers::pi;
        return n;
      }
      static const std::vector<std::pair<const char*, double (*)(double)>> fns = {
          {"sin", [](double v) { return std::sin(v); }},   {"cos", [](double v) { return std::cos(v); }},
          {"tan", [](double v) { return std::tan(v); }},   {"exp", [](double v) { return std::exp(v); }},
          {"log", [](double v) { return std::log(v); }},   {"sqrt", [](double v) { return std::sqrt(v); }},
          {"abs", [](double v) { return std::abs(v); }},
      };
      for (const auto& [name, fn] : fns) {
        if (id == name) {
          if (!eat('(')) fail("expected '(' after " + id);
          auto n = std::make_shared<Expr::Node>();
          n->kind = Expr::Node::Call;
          n->fn = fn;
          n->lhs = expr();
          if (!eat(')')) fail("expected ')'");
          return n;
        }
      }
      fail("unknown name '" + id + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

Expr Expr::parse(const std::string& text) {
  Parser p{text};
  Expr e;
  e.root_ = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  e.text_ = text;
  return e;
}

double Expr::operator()(double t, double x) const { return root_->eval(t, x); }

bool Expr::is_zero() const { return root_->kind == Node::Num && root_->value == 0.0; }

}  // namespace prab
