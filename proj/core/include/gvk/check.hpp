#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gvk/alg.hpp"
#include "gvk/sampler.hpp"

namespace gvk {

enum class Tier { Symbolic, Numeric };

/// Outcome of one verified identity.
struct Check {
  std::string name;
  Tier tier = Tier::Symbolic;
  bool passed = true;
  std::optional<Point> witness;
  std::string note;
};

const char* tier_name(Tier t);

/// Checks that every coefficient of `g` is zero.
template <Variance V>
Check check_zero(std::string name, const Graded<V>& g, const Sampler& sampler);

Check check_zero(std::string name, const Expr& e, const Chart& chart, const Sampler& sampler);

/// Checks a == b coefficientwise.
template <Variance V>
Check check_equal(std::string name, const Graded<V>& a, const Graded<V>& b, const Sampler& sampler) {
  return check_zero(std::move(name), a - b, sampler);
}

/// Throws InvariantFailure for the first failed check.
void require_all(const std::vector<Check>& checks);

}  // namespace gvk
