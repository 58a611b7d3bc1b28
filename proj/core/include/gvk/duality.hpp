#pragma once

#include <optional>
#include <vector>

#include "gvk/alg.hpp"
#include "gvk/sampler.hpp"

namespace gvk {

/// A multivector *U of complementary grade with vol(U ^ *U) = 1.
struct StarCompanion {
  MultiVector base;
  MultiVector companion;
  /// vol(base ^ companion), in normal form.
  Expr certificate;
  ZeroKind certificate_tier = ZeroKind::SymbolicZero;
};

/// A chart with a fixed volume form and the duality it induces between
/// k-vectors and (n-k)-forms, phi(U) = i_U vol.
class VolumeContext {
 public:
  /// Throws ChartError when vol is not a single nonvanishing top-degree term.
  VolumeContext(DiffForm vol, const Sampler& sampler = Sampler());

  /// vol = dx_1 ^ ... ^ dx_n.
  static VolumeContext flat(ChartPtr chart);

  const ChartPtr& chart() const noexcept { return vol_.chart(); }
  const DiffForm& vol() const noexcept { return vol_; }
  /// Coefficient of vol in the coordinate basis.
  const Expr& density() const noexcept { return density_; }
  /// phi^{-1}(1), the top multivector with vol(phi^{-1}(1)) = 1.
  const MultiVector& unit_multivector() const noexcept { return unit_; }

  DiffForm phi(const MultiVector& u) const;
  MultiVector phi_inv(const DiffForm& w) const;
  /// psi(U) = phi^{-1} d phi(U), grade k - 1; zero for k > n.
  MultiVector psi(const MultiVector& u) const;
  /// vol(U) for a top multivector U.
  Expr evaluate(const MultiVector& top) const;

  /// The deterministic companion: constant candidates first, then lowest mask.
  StarCompanion star(const MultiVector& u, const Sampler& sampler = Sampler()) const;
  /// All single-basis companions that pass the nonvanishing test, in the
  /// order star() ranks them.
  std::vector<StarCompanion> star_candidates(const MultiVector& u,
                                             const Sampler& sampler = Sampler()) const;
  /// Validates a caller-supplied companion; throws NoCompanion if
  /// vol(u ^ w) is not 1.
  StarCompanion companion_of(const MultiVector& u, const MultiVector& w,
                             const Sampler& sampler = Sampler()) const;

 private:
  DiffForm vol_;
  Expr density_;
  Expr inverse_density_;
  MultiVector unit_;
};

}  // namespace gvk
