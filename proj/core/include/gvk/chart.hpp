#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvk/error.hpp"

namespace gvk {

/// Grade-k data is indexed by n-bit masks, so charts are capped.
inline constexpr std::size_t kMaxDim = 12;

/// Ordered coordinate names of a single chart. Variables flagged positive are
/// sampled in [0.5, 2] instead of [-1, 1].
class Chart {
 public:
  explicit Chart(std::vector<std::string> vars, std::vector<bool> positive = {});

  std::size_t dim() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::string& var(std::size_t i) const { return vars_.at(i); }
  bool positive(std::size_t i) const { return positive_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  bool operator==(const Chart&) const = default;

 private:
  std::vector<std::string> vars_;
  std::vector<bool> positive_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> vars, std::vector<bool> positive = {});

/// Chart with one more coordinate appended (the Poissonization direction).
ChartPtr extend_chart(const Chart& base, const std::string& name, bool positive);

bool same_chart(const ChartPtr& a, const ChartPtr& b);

}  // namespace gvk
