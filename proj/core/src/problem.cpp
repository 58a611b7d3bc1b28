#include "gvk/problem.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <set>

#include <fmt/format.h>

namespace gvk {
namespace {

constexpr std::array<std::pair<std::string_view, CommandKind>, 8> kCommands{{
    {"verify", CommandKind::Verify},
    {"pair", CommandKind::Pair},
    {"gv", CommandKind::Gv},
    {"codim1", CommandKind::Codim1},
    {"poissonize", CommandKind::Poissonize},
    {"bridge", CommandKind::Bridge},
    {"rescale", CommandKind::Rescale},
    {"unimodular", CommandKind::Unimodular},
}};

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [name, kind] : kCommands) out.emplace_back(name);
  return out;
}

const std::vector<std::string>& directive_names() {
  static const std::vector<std::string> d{"chart", "vol", "pi", "E", "theta", "omega", "Omega",
                                          "seed", "points", "tol", "run"};
  return d;
}

bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// A line with comment stripped; columns stay those of the original text.
struct Line {
  std::size_t number;
  std::string_view text;

  [[noreturn]] void fail(std::size_t offset, const std::string& msg, std::vector<std::string> expected = {}) const {
    throw ParseError(number, offset + 1, msg, std::move(expected));
  }
  std::size_t skip_space(std::size_t i) const {
    while (i < text.size() && space(text[i])) ++i;
    return i;
  }
  std::size_t word_end(std::size_t i) const {
    while (i < text.size() && !space(text[i])) ++i;
    return i;
  }
  SourcePos pos(std::size_t offset) const { return {number, offset + 1}; }
};

template <class T>
T parse_number(const Line& line, std::size_t begin, std::size_t end, const char* what) {
  T value{};
  const char* first = line.text.data() + begin;
  const char* last = line.text.data() + end;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || begin == end) line.fail(begin, std::string("expected ") + what, {what});
  return value;
}

class ProblemParser {
 public:
  ProblemFile run(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    std::optional<Line> first_directive;
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      if (nl == std::string_view::npos) nl = text.size();
      ++number;
      std::string_view body = text.substr(start, nl - start);
      if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
      while (!body.empty() && space(body.back())) body.remove_suffix(1);
      const Line line{number, body};
      if (line.skip_space(0) < body.size()) {
        if (!first_directive) first_directive = line;
        directive(line);
      }
      start = nl + 1;
    }
    if (!p_.chart) throw ParseError(number == 0 ? 1 : number, 1, "missing chart declaration", {"chart"});
    finish(first_directive ? first_directive->number : 1);
    return std::move(p_);
  }

 private:
  void directive(const Line& line) {
    const std::size_t k0 = line.skip_space(0);
    std::size_t k1 = k0;
    while (k1 < line.text.size() && (std::isalnum(static_cast<unsigned char>(line.text[k1])) || line.text[k1] == '_')) ++k1;
    const std::string key(line.text.substr(k0, k1 - k0));
    if (std::find(directive_names().begin(), directive_names().end(), key) == directive_names().end()) {
      line.fail(k0, key.empty() ? "expected a directive" : "unknown directive '" + key + "'", directive_names());
    }
    if (!p_.chart && key != "chart") line.fail(k0, "the chart must be declared first", {"chart"});
    if (key != "run" && !seen_.insert(key).second) line.fail(k0, "duplicate '" + key + "'");

    if (key == "chart") return chart(line, k1);
    if (key == "run") return commands(line, k1);
    if (key == "seed") return scalar_arg(line, k1, [&](std::size_t b, std::size_t e) {
      p_.seed = parse_number<std::uint64_t>(line, b, e, "unsigned integer");
    });
    if (key == "points") return scalar_arg(line, k1, [&](std::size_t b, std::size_t e) {
      const auto n = parse_number<std::size_t>(line, b, e, "positive integer");
      if (n == 0) line.fail(b, "points must be positive", {"positive integer"});
      p_.points = n;
    });
    if (key == "tol") return scalar_arg(line, k1, [&](std::size_t b, std::size_t e) {
      const auto t = parse_number<double>(line, b, e, "positive number");
      if (!(t > 0)) line.fail(b, "tol must be positive", {"positive number"});
      p_.tol = t;
    });
    if (key == "vol") {
      const std::size_t b = line.skip_space(k1);
      p_.vol = parse_form(line.text.substr(b), p_.chart, static_cast<int>(p_.chart->dim()), line.pos(b));
      return;
    }
    std::size_t eq = line.skip_space(k1);
    if (eq >= line.text.size() || line.text[eq] != '=') line.fail(eq, "expected '='", {"="});
    const std::size_t b = line.skip_space(eq + 1);
    const std::string_view body = line.text.substr(b);
    if (key == "pi") p_.pi = parse_multivector(body, p_.chart, 2, line.pos(b));
    if (key == "E") p_.reeb = parse_multivector(body, p_.chart, 1, line.pos(b));
    if (key == "theta") p_.theta = parse_form(body, p_.chart, 1, line.pos(b));
    if (key == "omega") p_.omega = parse_form(body, p_.chart, 1, line.pos(b));
    if (key == "Omega") p_.big_omega = parse_form(body, p_.chart, 2, line.pos(b));
    lines_[key] = line.number;
  }

  void chart(const Line& line, std::size_t i) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (i = line.skip_space(i); i < line.text.size(); i = line.skip_space(i)) {
      const std::size_t e = line.word_end(i);
      std::string name(line.text.substr(i, e - i));
      if (!seen.insert(name).second) line.fail(i, "duplicate variable '" + name + "'");
      names.push_back(std::move(name));
      i = e;
    }
    if (names.empty()) line.fail(i, "a chart needs at least one variable", {"variable name"});
    try {
      p_.chart = make_chart(std::move(names));
    } catch (const ChartError& e) {
      line.fail(0, e.what());
    }
    validate_chart_names(*p_.chart, line.pos(line.skip_space(0)));
  }

  template <class F>
  void scalar_arg(const Line& line, std::size_t i, F&& take) {
    const std::size_t b = line.skip_space(i);
    const std::size_t e = line.word_end(b);
    take(b, e);
    if (line.skip_space(e) < line.text.size()) line.fail(line.skip_space(e), "unexpected text", {"end of line"});
  }

  void commands(const Line& line, std::size_t i) {
    for (i = line.skip_space(i); i < line.text.size(); i = line.skip_space(i)) {
      std::size_t e = i;
      while (e < line.text.size() && (std::isalnum(static_cast<unsigned char>(line.text[e])) || line.text[e] == '_')) ++e;
      const std::string_view name = line.text.substr(i, e - i);
      const auto it = std::find_if(kCommands.begin(), kCommands.end(), [&](const auto& c) { return c.first == name; });
      if (it == kCommands.end()) {
        line.fail(i, name.empty() ? "expected a command" : "unknown command '" + std::string(name) + "'", command_names());
      }
      Command cmd{it->second, std::nullopt, std::nullopt, line.pos(i)};
      const bool takes_arg = cmd.kind == CommandKind::Rescale || cmd.kind == CommandKind::Unimodular;
      const std::size_t open = line.skip_space(e);
      if (open < line.text.size() && line.text[open] == '(') {
        if (!takes_arg) line.fail(open, std::string(name) + " takes no argument");
        std::size_t close = open;
        int depth = 0;
        for (; close < line.text.size(); ++close) {
          if (line.text[close] == '(') ++depth;
          if (line.text[close] == ')' && --depth == 0) break;
        }
        if (close >= line.text.size()) line.fail(line.text.size(), "unbalanced parentheses", {")"});
        const std::size_t b = line.skip_space(open + 1);
        const std::string_view arg = line.text.substr(b, close - b);
        if (cmd.kind == CommandKind::Rescale) cmd.factor = parse_scalar(arg, p_.chart, line.pos(b));
        else cmd.field = parse_multivector(arg, p_.chart, std::nullopt, line.pos(b));
        e = close + 1;
      } else if (takes_arg) {
        line.fail(open, std::string(name) + " needs an argument", {"("});
      }
      if (e < line.text.size() && !space(line.text[e])) line.fail(e, "expected a space between commands");
      p_.commands.push_back(std::move(cmd));
      i = e;
    }
  }

  void finish(std::size_t first_line) {
    const bool pe = p_.pi || p_.reeb;
    const bool contact = p_.theta.has_value();
    const bool lcs = p_.omega || p_.big_omega;
    const int styles = int(pe) + int(contact) + int(lcs);
    auto line_of = [&](const char* key) { return lines_.count(key) ? lines_[key] : first_line; };
    if (styles == 0) throw ParseError(first_line, 1, "no tensors given", {"pi", "theta", "omega"});
    if (styles > 1) {
      const char* later = lcs ? (p_.omega ? "omega" : "Omega") : "theta";
      throw ParseError(line_of(later), 1, "more than one tensor input style");
    }
    if (p_.reeb && !p_.pi) throw ParseError(line_of("E"), 1, "E given without pi", {"pi"});
    if (lcs && !(p_.omega && p_.big_omega)) {
      throw ParseError(line_of(p_.omega ? "omega" : "Omega"), 1, "omega and Omega come together",
                       {p_.omega ? "Omega" : "omega"});
    }
  }

  ProblemFile p_;
  std::set<std::string> seen_;
  std::map<std::string, std::size_t> lines_;
};

}  // namespace

const char* command_name(CommandKind k) {
  for (const auto& [name, kind] : kCommands) {
    if (kind == k) return name.data();
  }
  return "?";
}

ProblemFile parse_problem(std::string_view text) { return ProblemParser().run(text); }

std::string print_problem(const ProblemFile& p) {
  std::string out = "chart";
  for (const auto& v : p.chart->vars()) out += " " + v;
  out += "\n";
  if (p.vol) out += "vol " + to_string(*p.vol) + "\n";
  if (p.pi) out += "pi = " + to_string(*p.pi) + "\n";
  if (p.reeb) out += "E = " + to_string(*p.reeb) + "\n";
  if (p.theta) out += "theta = " + to_string(*p.theta) + "\n";
  if (p.omega) out += "omega = " + to_string(*p.omega) + "\n";
  if (p.big_omega) out += "Omega = " + to_string(*p.big_omega) + "\n";
  if (p.seed) out += fmt::format("seed {}\n", *p.seed);
  if (p.points) out += fmt::format("points {}\n", *p.points);
  if (p.tol) out += fmt::format("tol {}\n", *p.tol);
  if (!p.commands.empty()) {
    out += "run";
    for (const auto& c : p.commands) {
      out += " ";
      out += command_name(c.kind);
      if (c.factor) out += "(" + to_string(*c.factor, *p.chart) + ")";
      if (c.field) out += "(" + to_string(*c.field) + ")";
    }
    out += "\n";
  }
  return out;
}

std::string normalize_problem_text(std::string_view text) {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view body = text.substr(start, nl - start);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    std::string line;
    bool gap = false;
    for (char c : body) {
      if (space(c)) {
        gap = !line.empty();
        continue;
      }
      if (gap) line += ' ';
      gap = false;
      line += c;
    }
    if (!line.empty()) out += line + "\n";
    start = nl + 1;
  }
  return out;
}

}  // namespace gvk
