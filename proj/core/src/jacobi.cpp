#include "gvk/jacobi.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <unordered_map>

#include "gvk/calculus.hpp"

namespace gvk {

const char* kind_name(JacobiKind k) { return k == JacobiKind::LcsType ? "lcs" : "contact"; }

namespace {

Tier tier_of(ZeroKind k) { return k == ZeroKind::SymbolicZero ? Tier::Symbolic : Tier::Numeric; }

bool all_constant(const std::vector<Expr>& coeffs) {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Expr& c) { return c.is_constant(); });
}

Rational factorial(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Expr sign_expr(int exponent) { return (exponent % 2 == 0) ? Expr(1) : Expr(-1); }

/// Check that a nonvanishing tuple stays nonvanishing on every sample point.
Check nonvanishing(std::string name, const std::vector<Expr>& coeffs, const Chart& chart,
                   const Sampler& sampler) {
  Check c;
  c.name = std::move(name);
  c.tier = all_constant(coeffs) ? Tier::Symbolic : Tier::Numeric;
  if (auto p = find_vanishing_point(coeffs, chart, sampler)) {
    c.passed = false;
    c.witness = std::move(p);
  }
  return c;
}

Eigen::MatrixXd sharp_matrix(const MultiVector& pi, const Point& p) {
  const auto n = static_cast<Eigen::Index>(pi.dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [mask, c] : pi.terms()) {
    const int i = std::countr_zero(mask);
    const int j = std::countr_zero(mask & (mask - 1));
    const double v = c.eval(p);
    m(i, j) = v;
    m(j, i) = -v;
  }
  return m;
}

Eigen::VectorXd vector_at(const MultiVector& x, const Point& p) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(x.dim()));
  for (const auto& [mask, c] : x.terms()) v(std::countr_zero(mask)) = c.eval(p);
  return v;
}

std::size_t rank_of(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double cutoff = 1e-8 * std::max(1.0, s.size() ? s(0) : 0.0);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s(i) > cutoff ? 1 : 0;
  return r;
}

/// Columns pi^sharp(dx_i) followed by E.
Eigen::MatrixXd distribution_at(const MultiVector& pi, const MultiVector& reeb, const Point& p) {
  const Eigen::MatrixXd s = sharp_matrix(pi, p);
  Eigen::MatrixXd d(s.rows(), s.cols() + 1);
  d << s, vector_at(reeb, p);
  return d;
}

using SymMatrix = std::vector<std::vector<Expr>>;

Expr determinant(const SymMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return Expr(1);
  // Laplace expansion along successive rows, memoized on the remaining columns.
  std::unordered_map<Mask, Expr> memo;
  auto det = [&](auto&& self, Mask cols) -> Expr {
    if (cols == 0) return Expr(1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(popcount(cols));
    Expr acc;
    int pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const Mask bit = Mask{1} << c;
      if (!(cols & bit)) continue;
      if (!a[row][c].is_zero()) {
        Expr t = a[row][c] * self(self, cols & ~bit);
        acc += (pos % 2 == 0) ? t : -t;
      }
      ++pos;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return det(det, full_mask(n));
}

/// Symbolic inverse by cofactors; nullopt when the determinant is zero.
std::optional<SymMatrix> inverse(const SymMatrix& a, const Chart& chart, const Sampler& sampler) {
  const std::size_t n = a.size();
  const Expr det = determinant(a);
  if (det.is_zero()) return std::nullopt;
  if (!det.is_constant() && find_vanishing_point(std::span<const Expr>(&det, 1), chart, sampler)) {
    return std::nullopt;
  }
  const Expr inv_det = det.inverse();
  SymMatrix out(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      SymMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Expr> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(a[r][c]);
        }
        minor.push_back(std::move(row));
      }
      Expr cof = determinant(minor) * inv_det;
      out[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return out;
}

SymMatrix transpose(const SymMatrix& a) {
  SymMatrix t(a.size(), std::vector<Expr>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

/// Antisymmetric coefficient matrix of a 2-form.
SymMatrix two_form_matrix(const DiffForm& w) {
  const std::size_t n = w.dim();
  SymMatrix m(n, std::vector<Expr>(n));
  for (const auto& [mask, c] : w.terms()) {
    const int i = std::countr_zero(mask);
    const int j = std::countr_zero(mask & (mask - 1));
    m[i][j] = c;
    m[j][i] = -c;
  }
  return m;
}

std::vector<Expr> components(const DiffForm& w) {
  std::vector<Expr> v(w.dim());
  for (const auto& [mask, c] : w.terms()) v[std::countr_zero(mask)] = c;
  return v;
}

std::vector<Expr> mat_vec(const SymMatrix& m, const std::vector<Expr>& v) {
  std::vector<Expr> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!m[i][k].is_zero() && !v[k].is_zero()) out[i] += m[i][k] * v[k];
    }
  }
  return out;
}

MultiVector vector_from(const ChartPtr& chart, const std::vector<Expr>& comps) {
  MultiVector::Terms t;
  for (std::size_t i = 0; i < comps.size(); ++i) t.emplace(Mask{1} << i, comps[i]);
  return MultiVector(chart, 1, std::move(t));
}

MultiVector bivector_from(const ChartPtr& chart, const SymMatrix& p) {
  MultiVector::Terms t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) t.emplace((Mask{1} << i) | (Mask{1} << j), p[i][j]);
  }
  return MultiVector(chart, 2, std::move(t));
}

/// The bracket whose image under phi is beta: [-*P, P] for LCS type and
/// [(-1)^q *P, P] for contact type, P the leaf multivector. For odd-grade P
/// the factor (-1)^q = (-1)^{pq} turns vol(P ^ *P) = 1 into vol(*P ^ P) = 1.
MultiVector beta_bracket(const JacobiStructure& j, const MultiVector& lead, const MultiVector& star) {
  if (j.kind == JacobiKind::LcsType) return schouten(-star, lead);
  return schouten(star * sign_expr(j.q), lead);
}

}  // namespace

std::size_t numeric_rank(const MultiVector& pi, const MultiVector* reeb, const Point& p) {
  return rank_of(reeb ? distribution_at(pi, *reeb, p) : sharp_matrix(pi, p));
}

MultiVector JacobiStructure::leaf_multivector() const {
  MultiVector p = power(pi, m);
  return kind == JacobiKind::LcsType ? p : wedge(p, reeb);
}

std::vector<Check> jacobi_axioms(const MultiVector& pi, const MultiVector& reeb, const Sampler& sampler) {
  require_same_chart(pi.chart(), reeb.chart());
  if (pi.grade() != 2) throw GradeError("pi must be a bivector");
  if (reeb.grade() != 1) throw GradeError("E must be a vector field");
  std::vector<Check> out;
  out.push_back(check_equal("jacobi.axiom1", schouten(pi, pi), Expr(2) * wedge(reeb, pi), sampler));
  out.push_back(check_zero("jacobi.axiom2", schouten(pi, reeb), sampler));
  return out;
}

JacobiStructure classify_jacobi(const MultiVector& pi, const MultiVector& reeb, const Sampler& sampler) {
  const Chart& chart = *pi.chart();
  const int n = static_cast<int>(chart.dim());

  JacobiStructure j{pi, reeb, 0, JacobiKind::LcsType, 0, jacobi_axioms(pi, reeb, sampler)};
  if (!j.checks[0].passed) throw AxiomViolation("[pi,pi] = 2 E^pi", j.checks[0].witness);
  if (!j.checks[1].passed) throw AxiomViolation("[pi,E] = 0", j.checks[1].witness);

  MultiVector cur = MultiVector::scalar(pi.chart(), Expr(1));
  ZeroKind rank_kind = ZeroKind::SymbolicZero;
  for (;;) {
    MultiVector next = wedge(cur, pi);
    const auto coeffs = next.coefficients();
    const ZeroTest t = is_zero(coeffs, chart, sampler);
    if (t.zero()) {
      rank_kind = t.kind;
      break;
    }
    cur = std::move(next);
    ++j.m;
  }
  j.checks.push_back(Check{"jacobi.rank", tier_of(rank_kind), true, std::nullopt,
                           "m=" + std::to_string(j.m)});

  Check regular = nonvanishing("jacobi.regular", cur.coefficients(), chart, sampler);
  if (!regular.passed) throw NotRegular("pi^m vanishes at a sample point", regular.witness);
  j.checks.push_back(std::move(regular));

  const MultiVector top = wedge(cur, reeb);
  const auto top_coeffs = top.coefficients();
  const ZeroTest lcs = is_zero(top_coeffs, chart, sampler);
  Check kind{"jacobi.kind", tier_of(lcs.kind), true, std::nullopt, {}};
  if (lcs.zero()) {
    j.kind = JacobiKind::LcsType;
    kind.tier = Tier::Numeric;
    const std::size_t want = static_cast<std::size_t>(2 * j.m);
    std::optional<Point> bad;
    sampler.for_each_point(chart, [&](const Point& p) {
      if (numeric_rank(pi, &reeb, p) != want || numeric_rank(pi, nullptr, p) != want) {
        bad = p;
        return false;
      }
      return true;
    });
    if (bad) throw NotRegular("E leaves the image of pi^sharp at a sample point", bad);
  } else {
    j.kind = JacobiKind::ContactType;
    Check c = nonvanishing("jacobi.kind", top_coeffs, chart, sampler);
    if (!c.passed) {
      throw NotRegular("pi^m ^ E vanishes at some sample points but not at others", c.witness);
    }
    kind.tier = c.tier;
  }
  kind.note = kind_name(j.kind);
  j.checks.push_back(std::move(kind));
  j.q = j.kind == JacobiKind::LcsType ? n - 2 * j.m : n - 2 * j.m - 1;
  return j;
}

JacobiStructure verify_jacobi(const MultiVector& pi, const MultiVector& reeb, const Sampler& sampler) {
  JacobiStructure j = classify_jacobi(pi, reeb, sampler);
  const int n = static_cast<int>(j.dim());
  if (j.q <= 0 || j.q >= n) throw CodimOutOfRange(j.q, n);
  j.checks.push_back(Check{"jacobi.codim", Tier::Symbolic, true, std::nullopt, "q=" + std::to_string(j.q)});
  return j;
}

JacobiTensors contact_to_jacobi(const DiffForm& theta, const Sampler& sampler) {
  if (theta.grade() != 1) throw GradeError("a contact form has grade 1");
  const ChartPtr& chart = theta.chart();
  const std::size_t n = theta.dim();
  if (n % 2 == 0) throw NotContact("contact forms live on odd-dimensional charts", std::nullopt);
  const DiffForm dtheta = exterior_derivative(theta);
  const DiffForm top = wedge(theta, power(dtheta, static_cast<int>(n / 2)));
  if (auto p = find_vanishing_point(top.coefficients(), *chart, sampler)) {
    throw NotContact("theta ^ (d theta)^n vanishes at a sample point", p);
  }

  const SymMatrix w = two_form_matrix(dtheta);
  const std::vector<Expr> th = components(theta);
  SymMatrix flat = w;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) flat[a][b] += th[a] * th[b];
  }
  const auto m = inverse(transpose(flat), *chart, sampler);
  if (!m) throw SingularFlat("the flat map of theta is not symbolically invertible");

  const MultiVector reeb = vector_from(chart, mat_vec(*m, th));
  // pi^{ij} = dtheta(Y_j, Y_i) with Y_i the i-th column of M; the other
  // order gives [pi, pi] = -2 E ^ pi.
  SymMatrix p(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t jj = i + 1; jj < n; ++jj) {
      Expr acc;
      for (std::size_t a = 0; a < n; ++a) {
        if ((*m)[a][jj].is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (w[a][b].is_zero() || (*m)[b][i].is_zero()) continue;
          acc += (*m)[a][jj] * w[a][b] * (*m)[b][i];
        }
      }
      p[i][jj] = acc;
    }
  }
  return {bivector_from(chart, p), reeb};
}

JacobiTensors lcs_to_jacobi(const DiffForm& omega, const DiffForm& big_omega, const Sampler& sampler) {
  require_same_chart(omega.chart(), big_omega.chart());
  if (omega.grade() != 1 || big_omega.grade() != 2) {
    throw GradeError("an LCS pair is a 1-form and a 2-form");
  }
  const ChartPtr& chart = omega.chart();
  const std::size_t n = omega.dim();
  if (n % 2 != 0) throw NotLcs("chart dimension is odd", std::nullopt);

  const DiffForm top = power(big_omega, static_cast<int>(n / 2));
  if (auto p = find_vanishing_point(top.coefficients(), *chart, sampler)) {
    throw NotLcs("Omega^n != 0", p);
  }
  if (Check c = check_zero("lcs.closed", exterior_derivative(omega), sampler); !c.passed) {
    throw NotLcs("d omega = 0", c.witness);
  }
  if (Check c = check_equal("lcs.conformal", exterior_derivative(big_omega), wedge(omega, big_omega), sampler);
      !c.passed) {
    throw NotLcs("d Omega = omega ^ Omega", c.witness);
  }

  const auto inv = inverse(transpose(two_form_matrix(big_omega)), *chart, sampler);
  if (!inv) throw SingularMatrix("the matrix of Omega is not symbolically invertible");

  std::vector<Expr> e = mat_vec(*inv, components(omega));
  for (auto& c : e) c = -c;
  SymMatrix p(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t jj = i + 1; jj < n; ++jj) p[i][jj] = -(*inv)[jj][i];
  }
  return {bivector_from(chart, p), vector_from(chart, e)};
}

DefiningPair defining_pair(const JacobiStructure& j, const VolumeContext& ctx, const Sampler& sampler,
                           const std::optional<MultiVector>& companion) {
  require_same_chart(j.chart(), ctx.chart());
  const int n = static_cast<int>(j.dim());
  const MultiVector lead = j.leaf_multivector();
  StarCompanion star = companion ? ctx.companion_of(lead, *companion, sampler) : ctx.star(lead, sampler);

  const Expr inv_fact(Rational(1) / factorial(j.m));
  DiffForm alpha = ctx.phi(lead) * inv_fact;
  DiffForm beta = ctx.phi(beta_bracket(j, lead, star.companion));
  const DiffForm dbeta = exterior_derivative(beta);
  const DiffForm dbeta_q = power(dbeta, j.q);
  DiffForm gv = wedge(beta, dbeta_q);

  std::vector<Check> checks;
  checks.push_back(check_equal("pair.defining", exterior_derivative(alpha), wedge(beta, alpha), sampler));
  if (2 * j.q + 1 <= n) {
    checks.push_back(check_zero("pair.gv_closed", exterior_derivative(gv), sampler));
    checks.push_back(check_equal("pair.gv_contracted", gv,
                                 ctx.phi(contract(dbeta_q, ctx.phi_inv(beta))), sampler));
  } else {
    // beta ^ (d beta)^q has grade above n and both sides are the zero form.
    checks.push_back(Check{"pair.gv_closed", Tier::Symbolic, gv.is_zero(), std::nullopt, "grade exceeds n"});
    checks.push_back(
        Check{"pair.gv_contracted", Tier::Symbolic, gv.is_zero(), std::nullopt, "grade exceeds n"});
  }
  require_all(checks);
  return DefiningPair{std::move(alpha), std::move(beta), std::move(gv), std::move(star), j.q,
                      std::move(checks)};
}

DiffForm gv_representative(const JacobiStructure& j, const VolumeContext& ctx, const Sampler& sampler) {
  return defining_pair(j, ctx, sampler).gv;
}

DiffForm gv_codim1(const JacobiStructure& j, const VolumeContext& ctx, const Sampler& sampler) {
  if (j.q != 1) throw NotCodimOne("foliation codimension is " + std::to_string(j.q) + ", not 1");
  const DefiningPair pair = defining_pair(j, ctx, sampler);
  const MultiVector lead = j.leaf_multivector();
  const MultiVector b = beta_bracket(j, lead, pair.companion.companion);
  const MultiVector psi_b = ctx.psi(b);
  DiffForm result(j.chart(), 3);
  if (psi_b.grade() >= 1) {
    MultiVector inner = contract(ctx.phi(b), psi_b);
    if (j.kind == JacobiKind::ContactType) inner = -inner;
    result = ctx.phi(inner);
  }
  if (Check c = check_equal("codim1.agrees", result, pair.gv, sampler); !c.passed) {
    throw InvariantFailure("codimension-one formula differs from beta ^ d beta", c.witness);
  }
  return result;
}

MultiVector lift(const MultiVector& u, const ChartPtr& extended) {
  if (extended->dim() < u.dim()) throw ChartError("lift target is smaller than the source chart");
  return MultiVector(extended, u.grade(), u.terms());
}

DiffForm lift(const DiffForm& w, const ChartPtr& extended) {
  if (extended->dim() < w.dim()) throw ChartError("lift target is smaller than the source chart");
  return DiffForm(extended, w.grade(), w.terms());
}

Poissonization poissonize(const JacobiStructure& j, const Sampler& sampler) {
  const Chart& base = *j.chart();
  std::string name = "t";
  while (base.index_of(name)) name += "_";
  const ChartPtr ext = extend_chart(base, name, true);
  const std::size_t ti = base.dim();
  const Expr t = Expr::var(ti);
  const MultiVector dt = MultiVector::unit(ext, ti);
  const MultiVector pi = lift(j.pi, ext);
  const MultiVector reeb = lift(j.reeb, ext);
  Poissonization out{ext, ti, pi * t.inverse() + wedge(reeb, dt), {}};

  out.checks.push_back(check_zero("poisson.bracket", schouten(out.lambda, out.lambda), sampler));
  const MultiVector expected = Expr(j.m + 1) * t.pow(-j.m) * wedge(wedge(power(pi, j.m), reeb), dt);
  out.checks.push_back(check_equal("poisson.power", power(out.lambda, j.m + 1), expected, sampler));
  out.checks.push_back(check_zero("poisson.top", power(out.lambda, j.m + 2), sampler));

  const std::size_t want = static_cast<std::size_t>(j.kind == JacobiKind::ContactType ? 2 * j.m + 2 : 2 * j.m);
  Check rank{"poisson.rank", Tier::Numeric, true, std::nullopt, "rank=" + std::to_string(want)};
  sampler.for_each_point(*ext, [&](const Point& p) {
    if (numeric_rank(out.lambda, nullptr, p) != want) {
      rank.passed = false;
      rank.witness = p;
      return false;
    }
    return true;
  });
  out.checks.push_back(std::move(rank));
  require_all(out.checks);
  return out;
}

BridgeReport check_poissonization_bridge(const JacobiStructure& j, const VolumeContext& ctx,
                                         const Sampler& sampler) {
  if (j.kind != JacobiKind::ContactType) {
    throw PreconditionFailed(
        "the Poissonization bridge needs a contact-type structure; for LCS type the pulled-back "
        "foliation has odd leaf dimension while symplectic leaves are even (parity obstruction)");
  }
  const int n = static_cast<int>(j.dim());
  if (j.q <= 0 || j.q >= n) throw CodimOutOfRange(j.q, n);
  const DefiningPair pair = defining_pair(j, ctx, sampler);

  Poissonization poisson = poissonize(j, sampler);
  const ChartPtr ext = poisson.chart;
  const Expr t = Expr::var(poisson.t_index);
  const VolumeContext ext_ctx(wedge(lift(ctx.vol(), ext), DiffForm::unit(ext, poisson.t_index)), sampler);

  const MultiVector top = power(poisson.lambda, j.m + 1);
  // Lambda^{m+1} = (m+1) t^{-m} pi^m ^ E ^ d/dt, so this pairs to 1.
  const Expr scale = sign_expr(j.q) * Expr(Rational(1, j.m + 1)) * t.pow(j.m);
  StarCompanion star = ext_ctx.companion_of(top, lift(pair.companion.companion, ext) * scale, sampler);

  DiffForm big_a = ext_ctx.phi(top) * Expr(Rational(1) / factorial(j.m + 1));
  DiffForm big_b = ext_ctx.phi(schouten(-star.companion, top));
  DiffForm pulled = lift(pair.beta, ext);
  const DiffForm dt = DiffForm::unit(ext, poisson.t_index);
  // The t^m in the companion contributes the exact term -m dt/t to B.
  const DiffForm defect = dt * (Expr(-j.m) * t.inverse());

  std::vector<Check> checks = poisson.checks;
  checks.push_back(check_zero("bridge.pullback_mod_dt", wedge(big_b - pulled, dt), sampler));
  checks.push_back(check_equal("bridge.pullback", big_b, pulled + defect, sampler));
  checks.push_back(check_equal("bridge.defining", exterior_derivative(big_a), wedge(big_b, big_a), sampler));
  require_all(checks);
  return BridgeReport{std::move(poisson), std::move(pulled), std::move(big_a), std::move(big_b),
                      std::move(star), std::move(checks)};
}

JacobiStructure conformal_rescale(const JacobiStructure& j, const Expr& a, const Sampler& sampler) {
  const Chart& chart = *j.chart();
  if (auto p = find_vanishing_point(std::span<const Expr>(&a, 1), chart, sampler)) {
    throw RescaleVanishes("rescaling function vanishes at a sample point", p);
  }
  const DiffForm da = exterior_derivative(DiffForm::scalar(j.chart(), a));
  const MultiVector pi = j.pi * a;
  // With pi^sharp(alpha) = i_alpha pi the correction enters with a minus sign;
  // a plus sign breaks [pi, E] = 0 for non-constant a.
  const MultiVector reeb = j.reeb * a - sharp(j.pi, da);
  JacobiStructure out = classify_jacobi(pi, reeb, sampler);

  const bool same = out.m == j.m && out.kind == j.kind && out.q == j.q;
  out.checks.push_back(Check{"rescale.invariants", Tier::Symbolic, same, std::nullopt,
                             "m=" + std::to_string(out.m) + " q=" + std::to_string(out.q)});
  Check dist{"rescale.distribution", Tier::Numeric, true, std::nullopt, {}};
  sampler.for_each_point(chart, [&](const Point& p) {
    const Eigen::MatrixXd d0 = distribution_at(j.pi, j.reeb, p);
    const Eigen::MatrixXd d1 = distribution_at(pi, reeb, p);
    Eigen::MatrixXd both(d0.rows(), d0.cols() + d1.cols());
    both << d0, d1;
    const std::size_t r = rank_of(d0);
    if (rank_of(d1) != r || rank_of(both) != r) {
      dist.passed = false;
      dist.witness = p;
      return false;
    }
    return true;
  });
  out.checks.push_back(std::move(dist));
  require_all(out.checks);
  return out;
}

Unimodularity unimodularity(const VolumeContext& ctx, const MultiVector& u, const Sampler& sampler) {
  MultiVector psi = ctx.psi(u);
  Check c = check_zero("unimodular", psi, sampler);
  const bool ok = c.passed;
  return Unimodularity{ok, std::move(psi), std::move(c)};
}

}  // namespace gvk
