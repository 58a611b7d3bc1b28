#pragma once

// Exact scalar expressions on a chart.
//
// An Expr is always held in normal form: an expanded sum of terms
// c * a1^e1 * ... * ak^ek with exact rational c and integer exponents.
// Atoms are chart variables or opaque transcendental nodes (exp, sin, cos,
// ln) whose arguments are themselves normal forms. A multi-term sum raised
// to a negative power becomes a Group atom, which is how rational functions
// are carried without a division node. Atoms are collected but never merged,
// so exp(x)*exp(x) stays exp(x)^2.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gvk/chart.hpp"

namespace gvk {

using Rational = mpq_class;

enum class AtomKind : std::uint8_t { Var, Exp, Sin, Cos, Ln, Group };

struct Term;

class Expr {
 public:
  Expr() = default;
  Expr(long value);  // NOLINT(google-explicit-constructor)
  Expr(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Expr var(std::size_t index);
  static Expr exp(const Expr& arg);
  static Expr sin(const Expr& arg);
  static Expr cos(const Expr& arg);
  /// ln of an argument assumed positive; evaluation checks it.
  static Expr ln(const Expr& arg);

  Expr pow(int k) const;
  /// Multiplicative inverse: exact for single terms, a Group atom otherwise.
  Expr inverse() const;

  bool is_zero() const noexcept { return !terms_ || terms_->empty(); }
  bool is_constant() const noexcept;
  std::optional<Rational> constant_value() const;
  bool is_single_term() const noexcept { return term_count() == 1; }
  std::size_t term_count() const noexcept;
  const std::vector<Term>& terms() const;

  /// Highest variable index referenced (through atoms), or -1.
  int max_var() const;

  double eval(std::span<const double> point) const;

  std::strong_ordering compare(const Expr& other) const;
  bool operator==(const Expr& other) const { return compare(other) == 0; }
  bool operator<(const Expr& other) const { return compare(other) < 0; }

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  Expr& operator+=(const Expr& b) { return *this = *this + b; }
  Expr& operator-=(const Expr& b) { return *this = *this - b; }
  Expr& operator*=(const Expr& b) { return *this = *this * b; }

  static Expr from_terms(std::vector<Term> terms);

 private:
  std::shared_ptr<const std::vector<Term>> terms_;
};

struct Atom {
  AtomKind kind = AtomKind::Var;
  std::uint32_t var = 0;
  Expr arg;

  std::strong_ordering operator<=>(const Atom& other) const;
  bool operator==(const Atom& other) const { return (*this <=> other) == 0; }
};

struct Factor {
  Atom atom;
  int exponent = 1;
};

using Monomial = std::vector<Factor>;

struct Term {
  Rational coeff;
  Monomial mono;
};

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

/// Partial derivative with respect to chart variable `index`.
Expr diff(const Expr& e, std::size_t index);
/// Partial derivative by variable name; throws UnknownVariable.
Expr diff(const Expr& e, const Chart& chart, std::string_view var);

std::string to_string(const Expr& e, const Chart& chart);
/// Chart-free rendering with variables named v0, v1, ...
std::string to_string(const Expr& e);
std::string to_string(const Rational& r);

/// Raw expression tree as produced by a user or a generator, before
/// normalization. simplify() maps it to the normal form.
class Tree {
 public:
  enum class Kind : std::uint8_t { Const, Var, Add, Mul, Neg, Pow, Exp, Sin, Cos, Ln };

  static Tree constant(const Rational& v);
  static Tree variable(std::size_t index);
  static Tree add(Tree a, Tree b);
  static Tree sub(Tree a, Tree b);
  static Tree mul(Tree a, Tree b);
  static Tree neg(Tree a);
  static Tree pow(Tree a, int k);
  static Tree call(Kind fn, Tree arg);

  Kind kind() const;
  double eval(std::span<const double> point) const;
  std::string to_string(const Chart& chart) const;

  friend Expr simplify(const Tree& t);

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Expr simplify(const Tree& t);

}  // namespace gvk
