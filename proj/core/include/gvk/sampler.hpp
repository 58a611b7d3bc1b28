#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gvk/chart.hpp"
#include "gvk/expr.hpp"

namespace gvk {

struct SamplerOptions {
  std::uint64_t seed = 0;
  std::size_t points = 64;
  double tol = 1e-9;
};

/// Deterministic point stream for numeric zero tests. Coordinates are uniform
/// in [-1, 1], positive variables in [0.5, 2]. Point j of a given chart and
/// seed is the same on every call.
class Sampler {
 public:
  Sampler() = default;
  explicit Sampler(SamplerOptions options) : options_(options) {}

  const SamplerOptions& options() const noexcept { return options_; }
  std::size_t points() const noexcept { return options_.points; }
  double tol() const noexcept { return options_.tol; }

  /// Points points() .. 10*points() are the resampling reserve used when a
  /// point leaves an expression's domain.
  std::vector<Point> stream(const Chart& chart) const;

  /// Calls visit(point) on valid points until `points()` of them were visited
  /// or visit returns false. Points at which visit throws DomainError are
  /// skipped. Returns the number of accepted points.
  template <class Visit>
  std::size_t for_each_point(const Chart& chart, Visit&& visit) const;

 private:
  SamplerOptions options_;
};

enum class ZeroKind { SymbolicZero, NumericZero, NonZero };

struct ZeroTest {
  ZeroKind kind = ZeroKind::SymbolicZero;
  std::optional<Point> witness;
  double value = 0;

  bool zero() const noexcept { return kind != ZeroKind::NonZero; }
};

ZeroTest is_zero(const Expr& e, const Chart& chart, const Sampler& sampler = Sampler());

/// Joint zero test of several coefficients; the witness is the first point at
/// which some coefficient is not within tolerance of zero.
ZeroTest is_zero(std::span<const Expr> coeffs, const Chart& chart, const Sampler& sampler);

/// First sample point at which every coefficient is within tolerance of zero,
/// i.e. where the tuple vanishes. nullopt means nonvanishing everywhere sampled.
std::optional<Point> find_vanishing_point(std::span<const Expr> coeffs, const Chart& chart,
                                          const Sampler& sampler);

template <class Visit>
std::size_t Sampler::for_each_point(const Chart& chart, Visit&& visit) const {
  const auto pts = stream(chart);
  std::size_t accepted = 0;
  for (const auto& p : pts) {
    if (accepted >= options_.points) break;
    try {
      const bool keep_going = visit(p);
      ++accepted;
      if (!keep_going) break;
    } catch (const DomainError&) {
    }
  }
  return accepted;
}

}  // namespace gvk
