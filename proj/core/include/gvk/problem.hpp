#pragma once

// Line-oriented problem files.
//
//   chart <name>+
//   vol <form>
//   pi = <multivector>        E = <multivector>
//   theta = <form>
//   omega = <form>            Omega = <form>
//   seed <u64>   points <int>   tol <float>
//   run <command>*
//
// Commands: verify pair gv codim1 poissonize bridge rescale(<scalar>)
// unimodular(<multivector>). '#' starts a comment. `chart` comes first, each
// directive except `run` appears at most once, and exactly one of the three
// tensor inputs (pi/E, theta, omega/Omega) is given.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvk/alg.hpp"
#include "gvk/syntax.hpp"

namespace gvk {

enum class CommandKind { Verify, Pair, Gv, Codim1, Poissonize, Bridge, Rescale, Unimodular };

const char* command_name(CommandKind k);

struct Command {
  CommandKind kind = CommandKind::Verify;
  std::optional<Expr> factor;        // rescale
  std::optional<MultiVector> field;  // unimodular
  SourcePos at;
};

struct ProblemFile {
  ChartPtr chart;
  /// Absent means dx_1 ^ ... ^ dx_n.
  std::optional<DiffForm> vol;
  std::optional<MultiVector> pi;
  /// Absent with pi present means E = 0.
  std::optional<MultiVector> reeb;
  std::optional<DiffForm> theta;
  std::optional<DiffForm> omega;
  std::optional<DiffForm> big_omega;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> points;
  std::optional<double> tol;
  std::vector<Command> commands;
};

/// Throws ParseError with the line and column of the offending token.
ProblemFile parse_problem(std::string_view text);

/// Canonical text: one directive per line in the order of the grammar above,
/// expressions in printed normal form, all commands on one `run` line.
std::string print_problem(const ProblemFile& p);

/// Drops comments and blank lines, trims lines and collapses inner runs of
/// whitespace.
std::string normalize_problem_text(std::string_view text);

}  // namespace gvk
