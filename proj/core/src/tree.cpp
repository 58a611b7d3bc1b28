#include <cmath>

#include "gvk/expr.hpp"

namespace gvk {

struct Tree::Node {
  Kind kind;
  Rational value;
  std::size_t var = 0;
  int exponent = 0;
  std::vector<Tree> kids;
};

Tree Tree::constant(const Rational& v) {
  return Tree(std::make_shared<const Node>(Node{Kind::Const, v, 0, 0, {}}));
}

Tree Tree::variable(std::size_t index) {
  return Tree(std::make_shared<const Node>(Node{Kind::Var, 0, index, 0, {}}));
}

Tree Tree::add(Tree a, Tree b) {
  return Tree(std::make_shared<const Node>(Node{Kind::Add, 0, 0, 0, {std::move(a), std::move(b)}}));
}

Tree Tree::sub(Tree a, Tree b) { return add(std::move(a), neg(std::move(b))); }

Tree Tree::mul(Tree a, Tree b) {
  return Tree(std::make_shared<const Node>(Node{Kind::Mul, 0, 0, 0, {std::move(a), std::move(b)}}));
}

Tree Tree::neg(Tree a) {
  return Tree(std::make_shared<const Node>(Node{Kind::Neg, 0, 0, 0, {std::move(a)}}));
}

Tree Tree::pow(Tree a, int k) {
  return Tree(std::make_shared<const Node>(Node{Kind::Pow, 0, 0, k, {std::move(a)}}));
}

Tree Tree::call(Kind fn, Tree arg) {
  if (fn != Kind::Exp && fn != Kind::Sin && fn != Kind::Cos && fn != Kind::Ln) {
    throw Error("Tree::call expects exp, sin, cos or ln");
  }
  return Tree(std::make_shared<const Node>(Node{fn, 0, 0, 0, {std::move(arg)}}));
}

Tree::Kind Tree::kind() const { return node_->kind; }

double Tree::eval(std::span<const double> p) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Const: return n.value.get_d();
    case Kind::Var: return p[n.var];
    case Kind::Add: return n.kids[0].eval(p) + n.kids[1].eval(p);
    case Kind::Mul: return n.kids[0].eval(p) * n.kids[1].eval(p);
    case Kind::Neg: return -n.kids[0].eval(p);
    case Kind::Pow: {
      const double b = n.kids[0].eval(p);
      if (b == 0 && n.exponent < 0) throw DomainError("division by zero", "pow");
      return std::pow(b, n.exponent);
    }
    case Kind::Exp: return std::exp(n.kids[0].eval(p));
    case Kind::Sin: return std::sin(n.kids[0].eval(p));
    case Kind::Cos: return std::cos(n.kids[0].eval(p));
    case Kind::Ln: {
      const double v = n.kids[0].eval(p);
      if (!(v > 0)) throw DomainError("ln of non-positive value", "ln");
      return std::log(v);
    }
  }
  return 0;
}

std::string Tree::to_string(const Chart& chart) const {
  const Node& n = *node_;
  auto kid = [&](std::size_t i) { return n.kids[i].to_string(chart); };
  switch (n.kind) {
    case Kind::Const: return "(" + gvk::to_string(n.value) + ")";
    case Kind::Var: return chart.var(n.var);
    case Kind::Add: return "(" + kid(0) + " + " + kid(1) + ")";
    case Kind::Mul: return "(" + kid(0) + "*" + kid(1) + ")";
    case Kind::Neg: return "(-" + kid(0) + ")";
    case Kind::Pow: return "(" + kid(0) + "^" + std::to_string(n.exponent) + ")";
    case Kind::Exp: return "exp(" + kid(0) + ")";
    case Kind::Sin: return "sin(" + kid(0) + ")";
    case Kind::Cos: return "cos(" + kid(0) + ")";
    case Kind::Ln: return "ln(" + kid(0) + ")";
  }
  return {};
}

Expr simplify(const Tree& t) {
  const auto& n = *t.node_;
  switch (n.kind) {
    case Tree::Kind::Const: return Expr(n.value);
    case Tree::Kind::Var: return Expr::var(n.var);
    case Tree::Kind::Add: return simplify(n.kids[0]) + simplify(n.kids[1]);
    case Tree::Kind::Mul: return simplify(n.kids[0]) * simplify(n.kids[1]);
    case Tree::Kind::Neg: return -simplify(n.kids[0]);
    case Tree::Kind::Pow: return simplify(n.kids[0]).pow(n.exponent);
    case Tree::Kind::Exp: return Expr::exp(simplify(n.kids[0]));
    case Tree::Kind::Sin: return Expr::sin(simplify(n.kids[0]));
    case Tree::Kind::Cos: return Expr::cos(simplify(n.kids[0]));
    case Tree::Kind::Ln: return Expr::ln(simplify(n.kids[0]));
  }
  return Expr();
}

}  // namespace gvk
