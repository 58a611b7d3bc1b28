#include "gvk/check.hpp"

namespace gvk {

const char* tier_name(Tier t) { return t == Tier::Symbolic ? "symbolic" : "numeric"; }

namespace {

Check from_test(std::string name, const ZeroTest& t) {
  Check c;
  c.name = std::move(name);
  c.tier = t.kind == ZeroKind::SymbolicZero ? Tier::Symbolic : Tier::Numeric;
  c.passed = t.zero();
  c.witness = t.witness;
  return c;
}

}  // namespace

template <Variance V>
Check check_zero(std::string name, const Graded<V>& g, const Sampler& sampler) {
  const auto coeffs = g.coefficients();
  return from_test(std::move(name), is_zero(coeffs, *g.chart(), sampler));
}

template Check check_zero(std::string, const MultiVector&, const Sampler&);
template Check check_zero(std::string, const DiffForm&, const Sampler&);

Check check_zero(std::string name, const Expr& e, const Chart& chart, const Sampler& sampler) {
  return from_test(std::move(name), is_zero(e, chart, sampler));
}

void require_all(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) throw InvariantFailure(c.name, c.witness);
  }
}

}  // namespace gvk
