#include "gvk/sampler.hpp"

#include <cmath>

namespace gvk {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<Point> Sampler::stream(const Chart& chart) const {
  const std::size_t total = 10 * options_.points;
  std::vector<Point> out;
  out.reserve(total);
  std::uint64_t state = options_.seed;
  for (std::size_t j = 0; j < total; ++j) {
    Point p(chart.dim());
    for (std::size_t i = 0; i < chart.dim(); ++i) {
      const double u = unit(state);
      p[i] = chart.positive(i) ? 0.5 + 1.5 * u : -1.0 + 2.0 * u;
    }
    out.push_back(std::move(p));
  }
  return out;
}

ZeroTest is_zero(const Expr& e, const Chart& chart, const Sampler& sampler) {
  return is_zero(std::span<const Expr>(&e, 1), chart, sampler);
}

ZeroTest is_zero(std::span<const Expr> coeffs, const Chart& chart, const Sampler& sampler) {
  std::vector<const Expr*> live;
  for (const auto& c : coeffs) {
    if (!c.is_zero()) live.push_back(&c);
  }
  if (live.empty()) return {};
  ZeroTest result{ZeroKind::NumericZero, std::nullopt, 0};
  const std::size_t accepted = sampler.for_each_point(chart, [&](const Point& p) {
    std::vector<double> values;
    values.reserve(live.size());
    for (const auto* c : live) values.push_back(c->eval(p));
    for (double v : values) {
      if (!(std::abs(v) < sampler.tol())) {
        result = ZeroTest{ZeroKind::NonZero, p, v};
        return false;
      }
    }
    return true;
  });
  if (accepted == 0) {
    throw DomainError("no sample point inside the expression domain", to_string(*live.front(), chart));
  }
  return result;
}

std::optional<Point> find_vanishing_point(std::span<const Expr> coeffs, const Chart& chart,
                                          const Sampler& sampler) {
  std::optional<Point> found;
  bool all_zero = true;
  for (const auto& c : coeffs) all_zero = all_zero && c.is_zero();
  if (all_zero) return sampler.stream(chart).front();
  sampler.for_each_point(chart, [&](const Point& p) {
    bool vanishes = true;
    for (const auto& c : coeffs) {
      if (c.is_zero()) continue;
      if (std::abs(c.eval(p)) >= sampler.tol()) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) {
      found = p;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace gvk
