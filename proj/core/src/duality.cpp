#include "gvk/duality.hpp"

#include <algorithm>

#include "gvk/calculus.hpp"

namespace gvk {

VolumeContext::VolumeContext(DiffForm vol, const Sampler& sampler)
    : vol_(std::move(vol)), unit_(vol_.chart(), static_cast<int>(vol_.dim())) {
  const std::size_t n = vol_.dim();
  if (vol_.grade() != static_cast<int>(n) || vol_.terms().size() != 1) {
    throw ChartError("volume form must be a single top-degree term");
  }
  density_ = vol_.coeff(full_mask(n));
  if (auto p = find_vanishing_point(std::span<const Expr>(&density_, 1), *vol_.chart(), sampler)) {
    throw ChartError("volume form vanishes at a sample point");
  }
  inverse_density_ = density_.inverse();
  unit_ = MultiVector::basis(vol_.chart(), full_mask(n), inverse_density_);
}

VolumeContext VolumeContext::flat(ChartPtr chart) {
  const Mask all = full_mask(chart->dim());
  return VolumeContext(DiffForm::basis(std::move(chart), all));
}

DiffForm VolumeContext::phi(const MultiVector& u) const {
  require_same_chart(u.chart(), chart());
  return contract(u, vol_);
}

MultiVector VolumeContext::phi_inv(const DiffForm& w) const {
  require_same_chart(w.chart(), chart());
  const std::size_t n = vol_.dim();
  if (w.grade() > static_cast<int>(n)) return MultiVector(chart(), 0);
  const Mask all = full_mask(n);
  std::map<Mask, Expr> out;
  for (const auto& [m, c] : w.terms()) {
    const Mask j = all & ~m;
    // phi(d/dx_J) = s * density * dx_K with K the complement of J.
    const int s = contraction_sign(j, all);
    Expr v = c * inverse_density_;
    out.emplace(j, s < 0 ? -v : v);
  }
  return MultiVector(chart(), static_cast<int>(n) - w.grade(), std::move(out));
}

MultiVector VolumeContext::psi(const MultiVector& u) const {
  if (u.grade() < 1) throw GradeError("psi is defined on grades k >= 1");
  if (u.grade() > static_cast<int>(u.dim())) return MultiVector(chart(), u.grade() - 1);
  return phi_inv(exterior_derivative(phi(u)));
}

Expr VolumeContext::evaluate(const MultiVector& top) const { return pair_top(vol_, top); }

namespace {

struct Candidate {
  Mask mask;
  Expr coeff;
  bool constant;
};

}  // namespace

std::vector<StarCompanion> VolumeContext::star_candidates(const MultiVector& u,
                                                          const Sampler& sampler) const {
  require_same_chart(u.chart(), chart());
  if (u.is_zero()) throw NoCompanion("star of the zero multivector", std::nullopt);
  const Mask all = full_mask(vol_.dim());
  std::vector<Candidate> cands;
  for (const auto& [m, c] : u.terms()) {
    const Mask j = all & ~m;
    const Expr value = evaluate(wedge(u, MultiVector::basis(chart(), j)));
    if (value.is_zero()) continue;
    cands.push_back({j, value, value.is_constant()});
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.constant != b.constant) return a.constant;
    return a.mask < b.mask;
  });
  std::vector<StarCompanion> out;
  for (const auto& c : cands) {
    if (!c.constant && find_vanishing_point(std::span<const Expr>(&c.coeff, 1), *chart(), sampler)) {
      continue;
    }
    const MultiVector w = MultiVector::basis(chart(), c.mask, c.coeff.inverse());
    out.push_back(companion_of(u, w, sampler));
  }
  return out;
}

StarCompanion VolumeContext::star(const MultiVector& u, const Sampler& sampler) const {
  auto all = star_candidates(u, sampler);
  if (all.empty()) {
    throw NoCompanion("no complementary basis element has a nonvanishing pairing", std::nullopt);
  }
  return std::move(all.front());
}

StarCompanion VolumeContext::companion_of(const MultiVector& u, const MultiVector& w,
                                          const Sampler& sampler) const {
  require_same_chart(u.chart(), chart());
  if (u.grade() + w.grade() != static_cast<int>(vol_.dim())) {
    throw GradeError("companion grade must complement the base grade");
  }
  const Expr cert = evaluate(wedge(u, w));
  const Expr defect = cert - Expr(1);
  const ZeroTest t = is_zero(defect, *chart(), sampler);
  if (!t.zero()) throw NoCompanion("vol(U ^ *U) differs from 1", t.witness);
  return StarCompanion{u, w, cert, t.kind};
}

}  // namespace gvk
