#include <doctest.h>

#include "gvk/error.hpp"
#include "gvk/fixtures.hpp"
#include "gvk/problem.hpp"
#include "gvk/report.hpp"

using namespace gvk;

namespace {

Report run(std::string_view text) { return execute(parse_problem(text)); }

std::string structured(std::string_view text) { return emit(run(text), ReportFormat::Structured); }

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

int line_of_error(std::string_view text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return 0;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("every fixture prints back to its source") {
    REQUIRE(fixtures().size() >= 10);
    for (const auto& f : fixtures()) {
      CAPTURE(f.name);
      const ProblemFile p = parse_problem(f.source);
      const std::string printed = print_problem(p);
      CHECK(normalize_problem_text(printed) == normalize_problem_text(f.source));
      CHECK(print_problem(parse_problem(printed)) == printed);
    }
  }

  TEST_CASE("every fixture runs clean and deterministically") {
    for (const auto& f : fixtures()) {
      CAPTURE(f.name);
      const Report r = run(f.source);
      CHECK(r.exit_code() == 0);
      CHECK(emit(r, ReportFormat::Structured) == structured(f.source));
    }
    CHECK(find_fixture("no-such-fixture") == nullptr);
  }

  TEST_CASE("comments, blank lines and spacing are irrelevant") {
    const std::string a = "chart x1 x2 x3\npi = d/dx1^d/dx2\nrun verify pair\n";
    const std::string b = "# leaves\n\nchart   x1 x2  x3 # coordinates\n  pi =  d/dx1 ^ d/dx2\n\nrun verify\nrun pair\n";
    CHECK(print_problem(parse_problem(a)) == print_problem(parse_problem(b)));
    CHECK(structured(a) == structured(b));
  }

  TEST_CASE("structured records") {
    const std::string out = structured(find_fixture("poisson-r3")->source);
    CHECK(has_line(out, "check=jacobi.axiom1 tier=symbolic verdict=pass"));
    CHECK(has_line(out, "result=verify kind=lcs m=1 q=1"));
    CHECK(has_line(out, "value=gv expr=0"));
    CHECK(has_line(out, "value=pair.alpha expr=dx3"));
  }

  TEST_CASE("an empty run list does nothing") {
    const Report r = run("chart x1 x2 x3\npi = d/dx1^d/dx2\n");
    CHECK(r.records.empty());
    CHECK(r.exit_code() == 0);
  }

  TEST_CASE("failing inputs exit with 1") {
    const Report bad = run("chart x1 x2 x3\npi = d/dx1^d/dx2 + x1*d/dx1^d/dx3\nrun verify pair\n");
    CHECK(bad.exit_code() == 1);
    const std::string out = emit(bad, ReportFormat::Structured);
    CHECK(out.find("check=jacobi.axiom1 tier=numeric verdict=fail witness=(") != std::string::npos);
    CHECK(out.find("error=axiom_violation command=verify") != std::string::npos);
    CHECK(out.find("pair") == std::string::npos);

    const Report single = run("chart x1 x2\npi = d/dx1^d/dx2\nrun verify\n");
    CHECK(single.exit_code() == 1);
    CHECK(emit(single, ReportFormat::Structured).find("error=codim_out_of_range") != std::string::npos);

    const Report lcs = run(std::string(find_fixture("lcs-model-r2m-m1")->source) + "run bridge\n");
    CHECK(lcs.exit_code() == 1);
    CHECK(emit(lcs, ReportFormat::Structured).find("error=precondition_failed command=bridge") != std::string::npos);
  }

  TEST_CASE("a bivector wedged with itself is zero, and the axioms hold") {
    const Report r = run("chart x1 x2 x3\npi = d/dx1^d/dx1\nrun verify\n");
    CHECK(emit(r, ReportFormat::Structured).find("error=codim_out_of_range") != std::string::npos);
  }

  TEST_CASE("rescale replaces the structure for later commands") {
    const std::string out = structured("chart x1 x2 x3\npi = d/dx1^d/dx2\nrun verify rescale(exp(x3)) pair\n");
    CHECK(has_line(out, "value=rescale.pi expr=exp(x3)*d/dx1^d/dx2"));
    CHECK(has_line(out, "value=pair.beta expr=-dx3"));
  }

  TEST_CASE("derived tensors of form inputs are reported") {
    const std::string out = structured(find_fixture("contact-form-r3")->source);
    CHECK(has_line(out, "value=input.E expr=d/dx0"));
    CHECK(out.find("value=input.pi") != std::string::npos);
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_problem("pi = d/dx1^d/dx2\n"), ParseError);
    CHECK(line_of_error("chart x1 x2\nchart x1 x2\n") == 2);
    CHECK(line_of_error("chart x1 x1\n") == 1);
    CHECK(line_of_error("chart x1 x2\npi = d/dx1\n") == 2);
    CHECK(line_of_error("chart x1 x2\npi = d/dx1^d/dx2\nrun verify(1)\n") == 3);
    CHECK(line_of_error("chart x1 x2\npi = d/dx1^d/dx2\nrun rescale\n") == 3);
    CHECK(line_of_error("chart x1 x2\npi = d/dx1^d/dx2\nrun frobnicate\n") == 3);
    CHECK(line_of_error("chart x1 x2\npi = d/dx1^d/dx2\npoints 0\n") == 3);
    CHECK(line_of_error("chart x1 x2\npi = d/dx1^d/dx2\ntol -1\n") == 3);
    CHECK(line_of_error("chart x1 x2\nE = d/dx1\n") != 0);
    CHECK(line_of_error("chart x1 x2\nomega = dx1\n") != 0);
    CHECK(line_of_error("chart x1 x2\npi = d/dx1^d/dx2\ntheta = dx1\n") != 0);
    CHECK(line_of_error("chart x1 x2\npi = d/dx1^d/dx2\nseed 1\nseed 2\n") == 4);
  }

  TEST_CASE("overrides beat file options") {
    const ProblemFile p = parse_problem("chart x\npi = 0\nseed 5\npoints 10\ntol 1e-6\n");
    auto o = resolve_options(p);
    CHECK(o.seed == 5);
    CHECK(o.points == 10);
    CHECK(o.tol == doctest::Approx(1e-6));
    o = resolve_options(p, RunOverrides{9, 20, 1e-3});
    CHECK(o.seed == 9);
    CHECK(o.points == 20);
    CHECK(o.tol == doctest::Approx(1e-3));
    CHECK(input_error("io_error", "x").exit_code() == 2);
  }
}
