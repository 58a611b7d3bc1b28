#include "gvk/report.hpp"

#include <typeinfo>

#include <fmt/format.h>

#include "gvk/calculus.hpp"
#include "gvk/jacobi.hpp"

namespace gvk {
namespace {

std::string compact(std::string s) {
  std::erase(s, ' ');
  return s;
}

std::string point_text(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += fmt::format("{}", p[i]);
  }
  return out + ")";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

template <class E>
bool is(const std::exception& e) {
  return dynamic_cast<const E*>(&e) != nullptr;
}

std::string error_kind(const std::exception& e) {
  if (is<AxiomViolation>(e)) return "axiom_violation";
  if (is<NotRegular>(e)) return "not_regular";
  if (is<CodimOutOfRange>(e)) return "codim_out_of_range";
  if (is<NoCompanion>(e)) return "no_companion";
  if (is<InvariantFailure>(e)) return "invariant_failure";
  if (is<NotContact>(e)) return "not_contact";
  if (is<SingularFlat>(e)) return "singular_flat";
  if (is<NotLcs>(e)) return "not_lcs";
  if (is<SingularMatrix>(e)) return "singular_matrix";
  if (is<RescaleVanishes>(e)) return "rescale_vanishes";
  if (is<NotCodimOne>(e)) return "not_codim_one";
  if (is<PreconditionFailed>(e)) return "precondition_failed";
  if (is<DomainError>(e)) return "domain_error";
  if (is<GradeError>(e)) return "grade_error";
  if (is<ChartError>(e)) return "chart_error";
  if (is<UnknownVariable>(e)) return "unknown_variable";
  if (is<ParseError>(e)) return "parse_error";
  return "internal_error";
}

class Session {
 public:
  Session(const ProblemFile& p, SamplerOptions options) : p_(p), sampler_(options) {}

  Report run() {
    for (const auto& cmd : p_.commands) {
      command_ = command_name(cmd.kind);
      try {
        dispatch(cmd);
      } catch (const AxiomViolation& e) {
        if (tensors_) {
          for (auto& c : jacobi_axioms(tensors_->pi, tensors_->reeb, sampler_)) push(std::move(c));
        }
        fail(e, e.witness());
        break;
      } catch (const WitnessError& e) {
        fail(e, e.witness());
        break;
      } catch (const std::exception& e) {
        fail(e, std::nullopt);
        break;
      }
    }
    return std::move(report_);
  }

 private:
  void push(Record r) { report_.records.push_back(std::move(r)); }
  void push_all(const std::vector<Check>& cs) {
    for (const auto& c : cs) push(c);
  }
  void value(std::string name, const std::string& text) { push(ValueRecord{std::move(name), text}); }
  void fail(const std::exception& e, std::optional<Point> witness) {
    push(ErrorRecord{error_kind(e), command_, e.what(), std::move(witness), false});
  }

  const VolumeContext& ctx() {
    if (!ctx_) ctx_ = p_.vol ? VolumeContext(*p_.vol, sampler_) : VolumeContext::flat(p_.chart);
    return *ctx_;
  }

  const JacobiTensors& tensors() {
    if (tensors_) return *tensors_;
    if (p_.pi) {
      tensors_ = JacobiTensors{*p_.pi, p_.reeb ? *p_.reeb : MultiVector(p_.chart, 1)};
    } else {
      tensors_ = p_.theta ? contact_to_jacobi(*p_.theta, sampler_) : lcs_to_jacobi(*p_.omega, *p_.big_omega, sampler_);
      value("input.pi", to_string(tensors_->pi));
      value("input.E", to_string(tensors_->reeb));
    }
    return *tensors_;
  }

  void summary(const char* command, const JacobiStructure& j) {
    push(ResultRecord{command, {{"kind", kind_name(j.kind)}, {"m", std::to_string(j.m)}, {"q", std::to_string(j.q)}}});
  }

  const JacobiStructure& verified() {
    if (!verified_) {
      const auto& t = tensors();
      verified_ = verify_jacobi(t.pi, t.reeb, sampler_);
      push_all(verified_->checks);
      summary("verify", *verified_);
    }
    return *verified_;
  }

  const JacobiStructure& classified() {
    if (verified_) return *verified_;
    if (!classified_) {
      const auto& t = tensors();
      classified_ = classify_jacobi(t.pi, t.reeb, sampler_);
      push_all(classified_->checks);
      summary("classify", *classified_);
    }
    return *classified_;
  }

  const DefiningPair& pair() {
    if (!pair_) {
      pair_ = defining_pair(verified(), ctx(), sampler_);
      push_all(pair_->checks);
      value("pair.alpha", to_string(pair_->alpha));
      value("pair.beta", to_string(pair_->beta));
      value("pair.star", to_string(pair_->companion.companion));
    }
    return *pair_;
  }

  void dispatch(const Command& cmd) {
    switch (cmd.kind) {
      case CommandKind::Verify:
        if (verified_) summary("verify", *verified_);
        else verified();
        break;
      case CommandKind::Pair:
        pair();
        break;
      case CommandKind::Gv:
        value("gv", to_string(pair().gv));
        break;
      case CommandKind::Codim1: {
        const DiffForm gv = pair().gv;
        const DiffForm c1 = gv_codim1(verified(), ctx(), sampler_);
        push(check_equal("gv.codim1", c1, gv, sampler_));
        value("codim1", to_string(c1));
        break;
      }
      case CommandKind::Poissonize: {
        const Poissonization pz = poissonize(classified(), sampler_);
        push_all(pz.checks);
        value("poissonize.lambda", to_string(pz.lambda));
        poissonized_ = true;
        break;
      }
      case CommandKind::Bridge: {
        const BridgeReport b = check_poissonization_bridge(verified(), ctx(), sampler_);
        for (const auto& c : b.checks) {
          if (!poissonized_ || !c.name.starts_with("poisson.")) push(c);
        }
        value("bridge.pulled_beta", to_string(b.pulled_beta));
        value("bridge.B", to_string(b.big_b));
        break;
      }
      case CommandKind::Rescale: {
        const JacobiStructure& base = verified_ ? *verified_ : classified();
        JacobiStructure r = conformal_rescale(base, *cmd.factor, sampler_);
        push_all(r.checks);
        value("rescale.pi", to_string(r.pi));
        value("rescale.E", to_string(r.reeb));
        tensors_ = JacobiTensors{r.pi, r.reeb};
        const bool was_verified = verified_.has_value();
        verified_.reset();
        classified_.reset();
        pair_.reset();
        poissonized_ = false;
        if (was_verified) {
          const int n = static_cast<int>(r.dim());
          if (r.q <= 0 || r.q >= n) throw CodimOutOfRange(r.q, n);
          verified_ = std::move(r);
        } else {
          classified_ = std::move(r);
        }
        break;
      }
      case CommandKind::Unimodular: {
        const Unimodularity u = unimodularity(ctx(), *cmd.field, sampler_);
        push(u.check);
        value("unimodular.psi", to_string(u.psi));
        break;
      }
    }
  }

  const ProblemFile& p_;
  Sampler sampler_;
  Report report_;
  std::string command_;
  std::optional<VolumeContext> ctx_;
  std::optional<JacobiTensors> tensors_;
  std::optional<JacobiStructure> verified_;
  std::optional<JacobiStructure> classified_;
  std::optional<DefiningPair> pair_;
  bool poissonized_ = false;
};

struct StructuredLine {
  std::string operator()(const Check& c) const {
    std::string s = fmt::format("check={} tier={} verdict={}", c.name, tier_name(c.tier), c.passed ? "pass" : "fail");
    if (c.witness) s += " witness=" + point_text(*c.witness);
    return s;
  }
  std::string operator()(const ValueRecord& v) const { return fmt::format("value={} expr={}", v.name, compact(v.text)); }
  std::string operator()(const ResultRecord& r) const {
    std::string s = "result=" + r.command;
    for (const auto& [k, v] : r.fields) s += " " + k + "=" + v;
    return s;
  }
  std::string operator()(const ErrorRecord& e) const {
    std::string s = fmt::format("error={}", e.kind);
    if (!e.command.empty()) s += " command=" + e.command;
    s += " reason=" + quoted(e.reason);
    if (e.witness) s += " witness=" + point_text(*e.witness);
    return s;
  }
};

struct TextLine {
  std::string operator()(const Check& c) const {
    std::string s = fmt::format("[{}] {} ({})", c.passed ? "pass" : "FAIL", c.name, tier_name(c.tier));
    if (!c.note.empty()) s += " " + c.note;
    if (c.witness) s += " at " + point_text(*c.witness);
    return s;
  }
  std::string operator()(const ValueRecord& v) const { return v.name + " = " + v.text; }
  std::string operator()(const ResultRecord& r) const {
    std::string s = r.command + ":";
    for (const auto& [k, v] : r.fields) s += " " + k + " " + v;
    return s;
  }
  std::string operator()(const ErrorRecord& e) const {
    std::string s = "error";
    if (!e.command.empty()) s += " in " + e.command;
    s += " (" + e.kind + "): " + e.reason;
    if (e.witness) s += " at " + point_text(*e.witness);
    return s;
  }
};

}  // namespace

int Report::exit_code() const {
  int code = 0;
  for (const auto& r : records) {
    if (const auto* e = std::get_if<ErrorRecord>(&r)) {
      if (e->input_error) return 2;
      code = 1;
    }
    if (const auto* c = std::get_if<Check>(&r); c && !c->passed) code = 1;
  }
  return code;
}

SamplerOptions resolve_options(const ProblemFile& p, const RunOverrides& overrides) {
  SamplerOptions o;
  if (p.seed) o.seed = *p.seed;
  if (p.points) o.points = *p.points;
  if (p.tol) o.tol = *p.tol;
  if (overrides.seed) o.seed = *overrides.seed;
  if (overrides.points) o.points = *overrides.points;
  if (overrides.tol) o.tol = *overrides.tol;
  return o;
}

Report execute(const ProblemFile& p, const RunOverrides& overrides) {
  return Session(p, resolve_options(p, overrides)).run();
}

Report input_error(const std::string& kind, const std::string& reason) {
  Report r;
  r.records.push_back(ErrorRecord{kind, {}, reason, std::nullopt, true});
  return r;
}

std::string emit(const Report& r, ReportFormat format) {
  std::string out;
  for (const auto& rec : r.records) {
    out += format == ReportFormat::Structured ? std::visit(StructuredLine{}, rec) : std::visit(TextLine{}, rec);
    out += "\n";
  }
  return out;
}

}  // namespace gvk
