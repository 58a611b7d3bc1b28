#include "gvk/chart.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gvk {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message,
                       std::vector<std::string> expected)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

Chart::Chart(std::vector<std::string> vars, std::vector<bool> positive)
    : vars_(std::move(vars)), positive_(std::move(positive)) {
  if (vars_.empty() || vars_.size() > kMaxDim) {
    throw ChartError("chart dimension must be between 1 and " + std::to_string(kMaxDim) +
                     ", got " + std::to_string(vars_.size()));
  }
  if (positive_.empty()) positive_.assign(vars_.size(), false);
  if (positive_.size() != vars_.size()) {
    throw ChartError("positivity flags do not match chart dimension");
  }
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw ChartError("empty variable name");
    if (std::any_of(v.begin(), v.end(), [](unsigned char c) { return std::isspace(c); })) {
      throw ChartError("variable name contains whitespace: '" + v + "'");
    }
    if (!seen.insert(v).second) throw ChartError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Chart::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownVariable(std::string(name));
}

ChartPtr make_chart(std::vector<std::string> vars, std::vector<bool> positive) {
  return std::make_shared<const Chart>(std::move(vars), std::move(positive));
}

ChartPtr extend_chart(const Chart& base, const std::string& name, bool positive) {
  auto vars = base.vars();
  std::vector<bool> pos;
  for (std::size_t i = 0; i < base.dim(); ++i) pos.push_back(base.positive(i));
  vars.push_back(name);
  pos.push_back(positive);
  return make_chart(std::move(vars), std::move(pos));
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace gvk
