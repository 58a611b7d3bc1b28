#pragma once

// Random generators and independent oracles shared by the test suites.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gvk/alg.hpp"
#include "gvk/calculus.hpp"
#include "gvk/expr.hpp"

namespace gvk::test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Polynomial in the first n variables with small integer coefficients.
  Expr poly(std::size_t n, int degree, int terms = 3) {
    Expr out;
    for (int t = 0; t < terms; ++t) {
      Expr mono(integer(-3, 3));
      const int d = integer(0, degree);
      for (int i = 0; i < d; ++i) mono *= Expr::var(static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1)));
      out += mono;
    }
    return out;
  }

  Expr nonzero_poly(std::size_t n, int degree) {
    for (;;) {
      Expr e = poly(n, degree);
      if (!e.is_zero()) return e;
    }
  }

  template <Variance V>
  Graded<V> graded(const ChartPtr& chart, int grade, int degree, double density = 0.6) {
    const std::size_t n = chart->dim();
    typename Graded<V>::Terms terms;
    for (Mask m = 0; m <= full_mask(n); ++m) {
      if (popcount(m) != grade || !coin(density)) continue;
      Expr c = poly(n, degree);
      if (!c.is_zero()) terms.emplace(m, c);
    }
    return Graded<V>(chart, grade, std::move(terms));
  }

  MultiVector multivector(const ChartPtr& chart, int grade, int degree = 2) {
    return graded<Variance::Vector>(chart, grade, degree);
  }
  DiffForm form(const ChartPtr& chart, int grade, int degree = 2) { return graded<Variance::Form>(chart, grade, degree); }

  /// Raw tree over the first n variables mixing arithmetic and the
  /// transcendental set; ln only ever sees exp(...) so it stays defined.
  Tree tree(std::size_t n, int depth) {
    if (depth == 0 || coin(0.25)) {
      if (coin()) {
        Rational c(integer(-4, 4), integer(1, 3));
        c.canonicalize();
        return Tree::constant(c);
      }
      return Tree::variable(static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1)));
    }
    switch (integer(0, 8)) {
      case 0:
      case 1: return Tree::add(tree(n, depth - 1), tree(n, depth - 1));
      case 2: return Tree::sub(tree(n, depth - 1), tree(n, depth - 1));
      case 3:
      case 4: return Tree::mul(tree(n, depth - 1), tree(n, depth - 1));
      case 5: return Tree::pow(tree(n, depth - 1), integer(0, 3));
      case 6: return Tree::call(Tree::Kind::Sin, tree(n, depth - 1));
      case 7: return Tree::call(Tree::Kind::Cos, tree(n, depth - 1));
      default: return Tree::call(Tree::Kind::Ln, Tree::call(Tree::Kind::Exp, tree(n, depth - 1)));
    }
  }

  std::vector<double> point(std::size_t n) {
    std::vector<double> p(n);
    for (auto& x : p) x = real(-1, 1);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

/// Sign of the permutation sorting `seq`, counted by adjacent swaps; 0 on a
/// repeated entry.
inline int sort_sign(std::vector<int> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = 0; j + 1 < seq.size() - i; ++j) {
      if (seq[j] == seq[j + 1]) return 0;
      if (seq[j] > seq[j + 1]) {
        std::swap(seq[j], seq[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] == seq[i + 1]) return 0;
  }
  return sign;
}

inline std::vector<int> indices(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1) {
    if (m & 1) out.push_back(i);
  }
  return out;
}

inline double central_difference(const Expr& e, std::vector<double> p, std::size_t i, double h = 1e-5) {
  p[i] += h;
  const double up = e.eval(p);
  p[i] -= 2 * h;
  const double down = e.eval(p);
  return (up - down) / (2 * h);
}

/// Componentwise vector-field commutator [X, Y]^r = X(Y^r) - Y(X^r).
inline MultiVector commutator(const MultiVector& x, const MultiVector& y) {
  const ChartPtr& chart = x.chart();
  MultiVector out(chart, 1);
  for (std::size_t r = 0; r < chart->dim(); ++r) {
    const Mask bit = Mask{1} << r;
    Expr c;
    for (std::size_t p = 0; p < chart->dim(); ++p) {
      const Mask pb = Mask{1} << p;
      c += x.coeff(pb) * diff(y.coeff(bit), p) - y.coeff(pb) * diff(x.coeff(bit), p);
    }
    out += MultiVector::unit(chart, r, c);
  }
  return out;
}

inline MultiVector wedge_all(const ChartPtr& chart, const std::vector<MultiVector>& fs) {
  MultiVector out = MultiVector::scalar(chart, Expr(1));
  for (const auto& f : fs) out = wedge(out, f);
  return out;
}

// f d/dx_I as the decomposable product (f d/dx_i1) ^ d/dx_i2 ^ ...
inline std::vector<MultiVector> factors(const ChartPtr& chart, Mask m, const Expr& f) {
  std::vector<MultiVector> out;
  for (int i : indices(m)) {
    out.push_back(MultiVector::unit(chart, static_cast<std::size_t>(i), out.empty() ? f : Expr(1)));
  }
  return out;
}

// [f, Y_1 ^ ... ^ Y_l] = sum_j (-1)^{j-1} (-Y_j f) Y_1 ^ .. ^Y_j^ .. ^ Y_l.
inline MultiVector scalar_bracket(const ChartPtr& chart, const Expr& f, const std::vector<MultiVector>& ys) {
  MultiVector out(chart, static_cast<int>(ys.size()) - 1);
  for (std::size_t j = 0; j < ys.size(); ++j) {
    std::vector<MultiVector> rest;
    for (std::size_t b = 0; b < ys.size(); ++b) {
      if (b != j) rest.push_back(ys[b]);
    }
    const Expr yf = -directional(ys[j], f);
    out += ((j % 2 == 0) ? yf : -yf) * wedge_all(chart, rest);
  }
  return out;
}

/// The Schouten bracket expanded from its decomposable-term definition.
inline MultiVector schouten_oracle(const MultiVector& u, const MultiVector& v) {
  const ChartPtr& chart = u.chart();
  const int k = u.grade();
  const int l = v.grade();
  MultiVector out(chart, std::max(k + l - 1, 0));
  if (k + l == 0) return out;
  for (const auto& [mi, f] : u.terms()) {
    for (const auto& [mj, g] : v.terms()) {
      if (k == 0) {
        out += scalar_bracket(chart, f, factors(chart, mj, g));
        continue;
      }
      if (l == 0) {
        // [U, g] = (-1)^k [g, U]
        const MultiVector s = scalar_bracket(chart, g, factors(chart, mi, f));
        out += (k % 2 == 0) ? s : -s;
        continue;
      }
      const auto xs = factors(chart, mi, f);
      const auto ys = factors(chart, mj, g);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < l; ++j) {
          std::vector<MultiVector> fs{commutator(xs[i], ys[j])};
          for (int a = 0; a < k; ++a) {
            if (a != i) fs.push_back(xs[a]);
          }
          for (int b = 0; b < l; ++b) {
            if (b != j) fs.push_back(ys[b]);
          }
          const MultiVector term = wedge_all(chart, fs);
          out += ((i + j) % 2 == 0) ? term : -term;
        }
      }
    }
  }
  return out;
}

/// Flat-volume divergence sum_i d_i X^i.
inline Expr divergence(const MultiVector& x) {
  Expr out;
  for (const auto& [m, c] : x.terms()) out += diff(c, static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

inline int sign_of(int e) { return (e % 2 == 0) ? 1 : -1; }

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace gvk::test
