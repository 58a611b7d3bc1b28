#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gvk/check.hpp"
#include "gvk/problem.hpp"

namespace gvk {

struct ValueRecord {
  std::string name;
  std::string text;
};

/// Summary of a command, e.g. kind/m/q after verify.
struct ResultRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct ErrorRecord {
  std::string kind;
  std::string command;
  std::string reason;
  std::optional<Point> witness;
  bool input_error = false;
};

using Record = std::variant<Check, ValueRecord, ResultRecord, ErrorRecord>;

struct Report {
  std::vector<Record> records;

  /// 0 when every check passed and nothing failed, 2 on input errors,
  /// 1 otherwise.
  int exit_code() const;
};

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> points;
  std::optional<double> tol;
};

/// Defaults, then the file's values, then the overrides.
SamplerOptions resolve_options(const ProblemFile& p, const RunOverrides& overrides = {});

/// Runs the commands in order and stops at the first hard error. Never throws
/// for kernel errors; they become ErrorRecords.
Report execute(const ProblemFile& p, const RunOverrides& overrides = {});

/// A report holding one input-error record (unreadable file, parse error).
Report input_error(const std::string& kind, const std::string& reason);

enum class ReportFormat { Text, Structured };

std::string emit(const Report& r, ReportFormat format);

}  // namespace gvk
