#pragma once

// Sparse alternating tensors on a chart.
//
// A grade-k element stores one coefficient per strictly increasing index
// subset I, encoded as an n-bit mask. Multivectors use the basis
// d/dx_I = d/dx_i1 ^ ... ^ d/dx_ik, forms use dx_I. Zero coefficients are
// never stored, so the zero element of any grade is an empty map; elements of
// grade above n exist and are always zero.
//
// Interior products follow one convention throughout:
//   i_{U^V} = i_V o i_U   (multivector into form)
//   i_{a^b} = i_b o i_a   (form into multivector)
// with a single vector or covector acting as the graded derivation.

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "gvk/chart.hpp"
#include "gvk/expr.hpp"

namespace gvk {

using Mask = std::uint32_t;

enum class Variance { Vector, Form };

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(std::size_t n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

/// Sign of basis(a) ^ basis(b) relative to basis(a|b); 0 when they overlap.
int wedge_sign(Mask a, Mask b);

/// Sign of the iterated contraction of basis(inner) out of basis(outer),
/// applying the lowest index first; 0 unless inner is a subset of outer.
int contraction_sign(Mask inner, Mask outer);

template <Variance V>
class Graded {
 public:
  using Terms = std::map<Mask, Expr>;

  Graded(ChartPtr chart, int grade);
  Graded(ChartPtr chart, int grade, Terms terms);

  static Graded scalar(ChartPtr chart, const Expr& value);
  static Graded basis(ChartPtr chart, Mask mask, const Expr& coeff = Expr(1));
  /// Single basis vector d/dx_i (or covector dx_i).
  static Graded unit(ChartPtr chart, std::size_t index, const Expr& coeff = Expr(1));

  const ChartPtr& chart() const noexcept { return chart_; }
  std::size_t dim() const noexcept { return chart_->dim(); }
  int grade() const noexcept { return grade_; }
  const Terms& terms() const noexcept { return terms_; }
  Expr coeff(Mask mask) const;
  /// Scalar value of a grade-0 element.
  Expr scalar_value() const;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<Expr> coefficients() const;

  Graded operator-() const;
  Graded& operator+=(const Graded& other);
  Graded& operator-=(const Graded& other);
  Graded& operator*=(const Expr& f);
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator*(const Expr& f, Graded a) { return a *= f; }
  friend Graded operator*(Graded a, const Expr& f) { return a *= f; }

  bool operator==(const Graded& other) const;

  template <class F>
  Graded map(F&& f) const {
    Terms out;
    for (const auto& [m, c] : terms_) {
      Expr v = f(c);
      if (!v.is_zero()) out.emplace(m, std::move(v));
    }
    return Graded(chart_, grade_, std::move(out));
  }

 private:
  void add_term(Mask m, const Expr& c);

  ChartPtr chart_;
  int grade_;
  Terms terms_;
};

using MultiVector = Graded<Variance::Vector>;
using DiffForm = Graded<Variance::Form>;
using GradedElement = std::variant<MultiVector, DiffForm>;

extern template class Graded<Variance::Vector>;
extern template class Graded<Variance::Form>;

void require_same_chart(const ChartPtr& a, const ChartPtr& b);

template <Variance V>
Graded<V> wedge(const Graded<V>& a, const Graded<V>& b);

/// Variance-agnostic wedge; throws GradeError on variance mismatch.
GradedElement wedge(const GradedElement& a, const GradedElement& b);

/// i_alpha U: contraction of a multivector by a form (grade k - l).
MultiVector contract(const DiffForm& alpha, const MultiVector& u);
/// i_U omega: contraction of a form by a multivector (grade l - k).
DiffForm contract(const MultiVector& u, const DiffForm& omega);

/// pi^sharp(alpha) = i_alpha pi.
MultiVector sharp(const MultiVector& pi, const DiffForm& alpha);

/// Wedge power u^k; u^0 is the scalar 1.
template <Variance V>
Graded<V> power(const Graded<V>& u, int k);

/// Pairing of a top form with a top multivector: i_U omega as a scalar.
Expr pair_top(const DiffForm& omega, const MultiVector& u);

std::string to_string(const MultiVector& u);
std::string to_string(const DiffForm& w);
std::string basis_string(const Chart& chart, Mask mask, Variance v);

}  // namespace gvk
