#pragma once

#include <optional>
#include <vector>

#include "gvk/alg.hpp"
#include "gvk/check.hpp"
#include "gvk/duality.hpp"
#include "gvk/sampler.hpp"

namespace gvk {

enum class JacobiKind { LcsType, ContactType };

const char* kind_name(JacobiKind k);

/// A verified, classified regular Jacobi structure (pi, E) on a chart.
struct JacobiStructure {
  MultiVector pi;
  MultiVector reeb;
  /// pi^m != 0 and pi^{m+1} = 0.
  int m = 0;
  JacobiKind kind = JacobiKind::LcsType;
  /// Codimension of the characteristic foliation.
  int q = 0;
  std::vector<Check> checks;

  const ChartPtr& chart() const noexcept { return pi.chart(); }
  std::size_t dim() const noexcept { return pi.dim(); }
  /// pi^m for LCS type, pi^m ^ E for contact type.
  MultiVector leaf_multivector() const;
};

/// jacobi.axiom1: [pi, pi] = 2 E ^ pi, jacobi.axiom2: [pi, E] = 0.
std::vector<Check> jacobi_axioms(const MultiVector& pi, const MultiVector& reeb,
                                 const Sampler& sampler = Sampler());

/// Checks [pi, pi] = 2 E ^ pi and [pi, E] = 0, computes m, and classifies.
/// Throws AxiomViolation or NotRegular. Accepts any codimension, including
/// q = 0 (a structure that is a single leaf).
JacobiStructure classify_jacobi(const MultiVector& pi, const MultiVector& reeb,
                                const Sampler& sampler = Sampler());

/// classify_jacobi plus the standing assumption 0 < q < n
/// (throws CodimOutOfRange).
JacobiStructure verify_jacobi(const MultiVector& pi, const MultiVector& reeb,
                              const Sampler& sampler = Sampler());

struct JacobiTensors {
  MultiVector pi;
  MultiVector reeb;
};

/// Reeb field and bivector of a contact form theta on an odd-dimensional chart.
JacobiTensors contact_to_jacobi(const DiffForm& theta, const Sampler& sampler = Sampler());

/// Jacobi tensors of an LCS pair (omega, Omega) on an even-dimensional chart,
/// from i_E Omega = -omega and i_{pi^sharp a} Omega = -a.
JacobiTensors lcs_to_jacobi(const DiffForm& omega, const DiffForm& big_omega,
                            const Sampler& sampler = Sampler());

/// (alpha, beta) with d alpha = beta ^ alpha cutting out the foliation, and the
/// Godbillon-Vey representative gv = beta ^ (d beta)^q.
struct DefiningPair {
  DiffForm alpha;
  DiffForm beta;
  DiffForm gv;
  StarCompanion companion;
  int q = 0;
  std::vector<Check> checks;
};

/// Builds the pair from the leaf multivector and its star companion. A
/// caller-supplied companion replaces the deterministic choice. Throws
/// InvariantFailure if any of the pair identities fails.
DefiningPair defining_pair(const JacobiStructure& j, const VolumeContext& ctx,
                           const Sampler& sampler = Sampler(),
                           const std::optional<MultiVector>& companion = std::nullopt);

DiffForm gv_representative(const JacobiStructure& j, const VolumeContext& ctx,
                           const Sampler& sampler = Sampler());

/// Codimension-one formula phi(+-i_{phi B} psi B) for the bracket B that
/// defines beta. Cross-checked against gv_representative.
DiffForm gv_codim1(const JacobiStructure& j, const VolumeContext& ctx,
                   const Sampler& sampler = Sampler());

/// Copies of base-chart data onto a chart that extends it (same indices).
MultiVector lift(const MultiVector& u, const ChartPtr& extended);
DiffForm lift(const DiffForm& w, const ChartPtr& extended);

/// Lambda = t^{-1} pi + E ^ d/dt on the chart extended by a positive t. This
/// orientation of the t-term is the one for which [Lambda, Lambda] = 0 when
/// [pi, pi] = 2 E ^ pi.
struct Poissonization {
  ChartPtr chart;
  std::size_t t_index = 0;
  MultiVector lambda;
  std::vector<Check> checks;
};

/// Throws InvariantFailure if [Lambda, Lambda] != 0.
Poissonization poissonize(const JacobiStructure& j, const Sampler& sampler = Sampler());

struct BridgeReport {
  Poissonization poisson;
  DiffForm pulled_beta;  // pr^* beta
  DiffForm big_a;
  DiffForm big_b;
  StarCompanion lambda_companion;
  std::vector<Check> checks;
};

/// Compares the pulled-back beta of a contact-type structure with the
/// defining 1-form B of the symplectic foliation of its Poissonization,
/// using the volume form vol ^ dt: B = pr^* beta - m dt/t. LCS-type input is
/// rejected with PreconditionFailed (the pulled-back foliation has odd rank).
BridgeReport check_poissonization_bridge(const JacobiStructure& j, const VolumeContext& ctx,
                                         const Sampler& sampler = Sampler());

/// (a pi, a E - pi^sharp(da)) = (a pi, a E + pi(-, da)): the conformally
/// related structure.
JacobiStructure conformal_rescale(const JacobiStructure& j, const Expr& a,
                                  const Sampler& sampler = Sampler());

struct Unimodularity {
  bool unimodular = false;
  MultiVector psi;
  Check check;
};

Unimodularity unimodularity(const VolumeContext& ctx, const MultiVector& u,
                            const Sampler& sampler = Sampler());

/// Rank of the span of pi^sharp and (optionally) E at a point.
std::size_t numeric_rank(const MultiVector& pi, const MultiVector* reeb, const Point& p);

}  // namespace gvk
