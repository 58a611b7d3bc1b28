#include "gvk/calculus.hpp"

namespace gvk {

DiffForm exterior_derivative(const DiffForm& w) {
  const std::size_t n = w.dim();
  std::map<Mask, Expr> acc;
  for (const auto& [m, c] : w.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      const int s = wedge_sign(bit, m);
      if (s == 0) continue;
      Expr dc = diff(c, i);
      if (dc.is_zero()) continue;
      if (s < 0) dc = -dc;
      auto [it, inserted] = acc.try_emplace(m | bit, dc);
      if (!inserted) it->second += dc;
    }
  }
  return DiffForm(w.chart(), w.grade() + 1, std::move(acc));
}

Expr directional(const MultiVector& x, const Expr& f) {
  if (x.grade() != 1) throw GradeError("directional derivative along a non-vector");
  Expr out;
  for (const auto& [m, c] : x.terms()) out += c * diff(f, static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

namespace {

int parity(int e) { return (e & 1) ? -1 : 1; }

// [g, d/dx_I] for a scalar g, peeling the first vector of d/dx_I:
// [g, X^W] = [g, X]^W - X^[g, W] and [g, d/dx_i] = -d_i g.
MultiVector scalar_with_basis(const ChartPtr& chart, const Expr& g, Mask mask) {
  if (mask == 0) return MultiVector(chart, 0);  // [f, g] = 0
  const Mask low = mask & (~mask + 1);
  const Mask rest = mask & ~low;
  const auto i = static_cast<std::size_t>(std::countr_zero(low));
  const MultiVector x = MultiVector::basis(chart, low);
  const MultiVector w = MultiVector::basis(chart, rest);
  const MultiVector g_x = MultiVector::scalar(chart, -diff(g, i));
  if (rest == 0) return g_x;
  return wedge(g_x, w) - wedge(x, scalar_with_basis(chart, g, rest));
}

// [f d/dx_I, g] for scalar g, via antisymmetry: (-1)^k [g, f d/dx_I] and
// [g, f W] = [g, f]^W + f [g, W] = f [g, W].
MultiVector term_with_scalar(const ChartPtr& chart, const Expr& f, Mask mask, const Expr& g) {
  const int k = popcount(mask);
  return (parity(k) * f) * scalar_with_basis(chart, g, mask);
}

// [f d/dx_I, g d/dx_J].
MultiVector term_bracket(const ChartPtr& chart, const Expr& f, Mask mi, const Expr& g, Mask mj) {
  const int k = popcount(mi);
  const int l = popcount(mj);
  MultiVector out(chart, k + l - 1);
  // Leibniz with g as the grade-0 left factor of g^d/dx_J.
  if (k > 0) out += wedge(term_with_scalar(chart, f, mi, g), MultiVector::basis(chart, mj));
  if (l == 0) return out;
  // [f d/dx_I, d/dx_J] = -(-1)^{(k-1)(l-1)} [d/dx_J, f d/dx_I]
  //                    = -(-1)^{(k-1)(l-1)} [d/dx_J, f]^d/dx_I.
  const MultiVector inner =
      wedge(term_with_scalar(chart, Expr(1), mj, f), MultiVector::basis(chart, mi));
  out += (Expr(-parity((k - 1) * (l - 1))) * g) * inner;
  return out;
}

}  // namespace

MultiVector schouten(const MultiVector& u, const MultiVector& v) {
  require_same_chart(u.chart(), v.chart());
  const int grade = u.grade() + v.grade() - 1;
  if (grade < 0) return MultiVector(u.chart(), 0);
  MultiVector out(u.chart(), grade);
  for (const auto& [mi, f] : u.terms()) {
    for (const auto& [mj, g] : v.terms()) {
      out += term_bracket(u.chart(), f, mi, g, mj);
    }
  }
  return out;
}

DiffForm lie_derivative(const MultiVector& x, const DiffForm& w) {
  if (x.grade() != 1) throw GradeError("Lie derivative along a non-vector");
  DiffForm out = w.grade() < static_cast<int>(w.dim()) ? contract(x, exterior_derivative(w))
                                                       : DiffForm(w.chart(), w.grade());
  if (w.grade() > 0) out += exterior_derivative(contract(x, w));
  return out;
}

MultiVector lie_derivative(const MultiVector& x, const MultiVector& u) {
  if (x.grade() != 1) throw GradeError("Lie derivative along a non-vector");
  return schouten(x, u);
}

}  // namespace gvk
