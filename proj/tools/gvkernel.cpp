#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gvk/error.hpp"
#include "gvk/fixtures.hpp"
#include "gvk/problem.hpp"
#include "gvk/report.hpp"

namespace {

int finish(const gvk::Report& report, gvk::ReportFormat format) {
  std::cout << gvk::emit(report, format);
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify Jacobi structures and compute Godbillon-Vey representatives"};
  std::string file;
  std::string fixture;
  std::string format_name = "text";
  bool list = false;
  gvk::RunOverrides overrides;

  auto* file_opt = app.add_option("file", file, "Problem file");
  auto* fixture_opt = app.add_option("--fixture", fixture, "Run a built-in fixture");
  auto* list_opt = app.add_flag("--list-fixtures", list, "List the built-in fixtures");
  file_opt->excludes(fixture_opt)->excludes(list_opt);
  fixture_opt->excludes(list_opt);
  app.add_option("--seed", overrides.seed, "Sampler seed");
  app.add_option("--points", overrides.points, "Sample points per numeric test")->check(CLI::PositiveNumber);
  app.add_option("--tol", overrides.tol, "Numeric zero tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", format_name, "Report format")->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const auto format = format_name == "structured" ? gvk::ReportFormat::Structured : gvk::ReportFormat::Text;

  if (list) {
    for (const auto& f : gvk::fixtures()) std::cout << f.name << "  " << f.description << "\n";
    return 0;
  }

  std::string text;
  if (!fixture.empty()) {
    const gvk::Fixture* f = gvk::find_fixture(fixture);
    if (!f) return finish(gvk::input_error("unknown_fixture", "no fixture named '" + fixture + "'"), format);
    text = f->source;
  } else if (!file.empty()) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return finish(gvk::input_error("io_error", "cannot read '" + file + "'"), format);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::cerr << app.help();
    return 2;
  }

  gvk::ProblemFile problem;
  try {
    problem = gvk::parse_problem(text);
  } catch (const gvk::ParseError& e) {
    std::string reason = e.what();
    if (!e.expected().empty()) {
      reason += "; expected one of:";
      for (const auto& x : e.expected()) reason += " " + x;
    }
    return finish(gvk::input_error("parse_error", reason), format);
  }
  return finish(gvk::execute(problem, overrides), format);
}
