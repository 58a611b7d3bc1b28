#include "gvk/alg.hpp"

namespace gvk {

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Each element of b has to move past the elements of a that exceed it.
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const Mask low = rest & (~rest + 1);
    swaps += popcount(a & ~((low << 1) - 1));
  }
  return (swaps & 1) ? -1 : 1;
}

int contraction_sign(Mask inner, Mask outer) {
  if ((inner & outer) != inner) return 0;
  int sign = 1;
  Mask current = outer;
  for (Mask rest = inner; rest; rest &= rest - 1) {
    const Mask low = rest & (~rest + 1);
    if (popcount(current & (low - 1)) & 1) sign = -sign;
    current &= ~low;
  }
  return sign;
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (!same_chart(a, b)) throw ChartError("operands live on different charts");
}

template <Variance V>
Graded<V>::Graded(ChartPtr chart, int grade) : chart_(std::move(chart)), grade_(grade) {
  if (!chart_) throw ChartError("null chart");
  if (grade_ < 0) throw GradeError("negative grade");
}

template <Variance V>
Graded<V>::Graded(ChartPtr chart, int grade, Terms terms) : Graded(std::move(chart), grade) {
  const Mask all = full_mask(dim());
  for (auto& [m, c] : terms) {
    if ((m & ~all) != 0) throw ChartError("basis index outside the chart");
    if (popcount(m) != grade_) throw GradeError("basis element of the wrong grade");
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

template <Variance V>
Graded<V> Graded<V>::scalar(ChartPtr chart, const Expr& value) {
  Graded g(std::move(chart), 0);
  if (!value.is_zero()) g.terms_.emplace(0, value);
  return g;
}

template <Variance V>
Graded<V> Graded<V>::basis(ChartPtr chart, Mask mask, const Expr& coeff) {
  const int grade = popcount(mask);
  return Graded(std::move(chart), grade, Terms{{mask, coeff}});
}

template <Variance V>
Graded<V> Graded<V>::unit(ChartPtr chart, std::size_t index, const Expr& coeff) {
  if (index >= chart->dim()) throw ChartError("basis index outside the chart");
  return basis(std::move(chart), Mask{1} << index, coeff);
}

template <Variance V>
Expr Graded<V>::coeff(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Expr() : it->second;
}

template <Variance V>
Expr Graded<V>::scalar_value() const {
  if (grade_ != 0) throw GradeError("scalar_value() of a non-scalar element");
  return coeff(0);
}

template <Variance V>
std::vector<Expr> Graded<V>::coefficients() const {
  std::vector<Expr> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(c);
  return out;
}

template <Variance V>
void Graded<V>::add_term(Mask m, const Expr& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <Variance V>
Graded<V> Graded<V>::operator-() const {
  return map([](const Expr& c) { return -c; });
}

template <Variance V>
Graded<V>& Graded<V>::operator+=(const Graded& other) {
  require_same_chart(chart_, other.chart_);
  if (grade_ != other.grade_) throw GradeError("sum of elements of different grades");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

template <Variance V>
Graded<V>& Graded<V>::operator-=(const Graded& other) {
  return *this += -other;
}

template <Variance V>
Graded<V>& Graded<V>::operator*=(const Expr& f) {
  *this = map([&](const Expr& c) { return c * f; });
  return *this;
}

template <Variance V>
bool Graded<V>::operator==(const Graded& other) const {
  return same_chart(chart_, other.chart_) && grade_ == other.grade_ && terms_ == other.terms_;
}

template class Graded<Variance::Vector>;
template class Graded<Variance::Form>;

template <Variance V>
Graded<V> wedge(const Graded<V>& a, const Graded<V>& b) {
  require_same_chart(a.chart(), b.chart());
  std::map<Mask, Expr> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Expr prod = ca * cb;
      if (s < 0) prod = -prod;
      auto [it, inserted] = acc.try_emplace(ma | mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  return Graded<V>(a.chart(), a.grade() + b.grade(), std::move(acc));
}

template MultiVector wedge(const MultiVector&, const MultiVector&);
template DiffForm wedge(const DiffForm&, const DiffForm&);

GradedElement wedge(const GradedElement& a, const GradedElement& b) {
  if (a.index() != b.index()) throw GradeError("wedge of a multivector with a form");
  if (const auto* u = std::get_if<MultiVector>(&a)) return wedge(*u, std::get<MultiVector>(b));
  return wedge(std::get<DiffForm>(a), std::get<DiffForm>(b));
}

namespace {

template <Variance Out, Variance In>
Graded<Out> contract_impl(const Graded<In>& inner, const Graded<Out>& outer) {
  require_same_chart(inner.chart(), outer.chart());
  if (inner.grade() > outer.grade()) {
    throw GradeError("contraction of grade " + std::to_string(inner.grade()) + " into grade " +
                     std::to_string(outer.grade()));
  }
  std::map<Mask, Expr> acc;
  for (const auto& [mi, ci] : inner.terms()) {
    for (const auto& [mo, co] : outer.terms()) {
      const int s = contraction_sign(mi, mo);
      if (s == 0) continue;
      Expr prod = ci * co;
      if (s < 0) prod = -prod;
      auto [it, inserted] = acc.try_emplace(mo & ~mi, prod);
      if (!inserted) it->second += prod;
    }
  }
  return Graded<Out>(outer.chart(), outer.grade() - inner.grade(), std::move(acc));
}

}  // namespace

MultiVector contract(const DiffForm& alpha, const MultiVector& u) { return contract_impl(alpha, u); }

DiffForm contract(const MultiVector& u, const DiffForm& omega) { return contract_impl(u, omega); }

MultiVector sharp(const MultiVector& pi, const DiffForm& alpha) {
  if (pi.grade() != 2 || alpha.grade() != 1) throw GradeError("sharp expects a bivector and a 1-form");
  return contract(alpha, pi);
}

template <Variance V>
Graded<V> power(const Graded<V>& u, int k) {
  if (k < 0) throw GradeError("negative wedge power");
  Graded<V> result = Graded<V>::scalar(u.chart(), Expr(1));
  for (int i = 0; i < k; ++i) result = wedge(result, u);
  return result;
}

template MultiVector power(const MultiVector&, int);
template DiffForm power(const DiffForm&, int);

Expr pair_top(const DiffForm& omega, const MultiVector& u) {
  require_same_chart(omega.chart(), u.chart());
  if (omega.grade() != u.grade()) throw GradeError("pair_top expects equal grades");
  return contract(u, omega).scalar_value();
}

std::string basis_string(const Chart& chart, Mask mask, Variance v) {
  std::string out;
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    if (!(mask & (Mask{1} << i))) continue;
    if (!out.empty()) out += "^";
    out += (v == Variance::Vector ? "d/d" : "d") + chart.var(i);
  }
  return out;
}

namespace {

template <Variance V>
std::string render(const Graded<V>& g) {
  if (g.is_zero()) return "0";
  const Chart& chart = *g.chart();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : g.terms()) {
    std::string coeff;
    bool negative = false;
    if (c.is_single_term()) {
      negative = sgn(c.terms().front().coeff) < 0;
      coeff = to_string(negative ? -c : c, chart);
    } else {
      coeff = "(" + to_string(c, chart) + ")";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m == 0) {
      out += coeff;
    } else if (coeff == "1") {
      out += basis_string(chart, m, V);
    } else {
      out += coeff + "*" + basis_string(chart, m, V);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const MultiVector& u) { return render(u); }
std::string to_string(const DiffForm& w) { return render(w); }

}  // namespace gvk
