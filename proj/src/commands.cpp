#include "vinberg/commands.hpp"

#include <sstream>

namespace vinberg {

std::string error_object(const std::exception& e) {
  nlohmann::ordered_json err;
  std::string type = "InternalError";
  if (dynamic_cast<const ParseError*>(&e))
    type = "ParseError";
  else if (dynamic_cast<const NonCoxeterAngle*>(&e))
    type = "NonCoxeterAngle";
  else if (dynamic_cast<const CertificationFailed*>(&e))
    type = "CertificationFailed";
  else if (dynamic_cast<const ConfigError*>(&e))
    type = "ConfigError";
  else if (dynamic_cast<const DimensionError*>(&e))
    type = "DimensionError";
  else if (dynamic_cast<const ZeroVectorError*>(&e))
    type = "ZeroVectorError";
  else if (dynamic_cast<const OverflowError*>(&e))
    type = "OverflowError";
  else if (dynamic_cast<const InconsistentSystem*>(&e))
    type = "InconsistentSystem";
  else if (dynamic_cast<const EnumerationBudgetExceeded*>(&e))
    type = "EnumerationBudgetExceeded";
  err["type"] = type;
  err["message"] = e.what();
  if (auto* p = dynamic_cast<const ParseError*>(&e)) {
    err["field"] = p->field;
    err["line"] = p->line;
    err["column"] = p->column;
  } else if (auto* a = dynamic_cast<const NonCoxeterAngle*>(&e)) {
    err["i"] = a->i;
    err["j"] = a->j;
    err["c"] = a->c;
  } else if (auto* c = dynamic_cast<const CertificationFailed*>(&e)) {
    err["step"] = c->step;
  }
  return nlohmann::ordered_json{{"error", err}}.dump() + "\n";
}

namespace {

template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return CommandResult{kExitError, {}, error_object(e)};
  }
}

} // namespace

CommandResult cmd_run(const RunFlags& flags) {
  return guarded([&] {
    const QuadraticForm form(flags.phi, flags.dim);
    Budget budget;
    budget.max_roots = flags.max_roots;
    budget.max_k0 = flags.max_k0;
    const RunReport report = run(form, budget);
    const RunDocument doc = document_from_run(report);
    return CommandResult{report.verdict == Verdict::FiniteVolume ? kExitOk : kExitBudget, render(doc, flags.format), {}};
  });
}

CommandResult cmd_check(const std::string& input, std::optional<int> dim, Format format) {
  return guarded([&] {
    const CheckInput in = parse_check_input(input);
    std::optional<int> n = dim ? dim : in.dim;
    RunDocument doc;
    if (in.gram) {
      if (!n)
        throw ParseError("dim", "a Gram block needs the dimension");
      doc = document_from_gram(*n, *in.gram);
      doc.phi = in.phi;
    } else {
      if (!in.phi)
        throw ParseError("form.phi", "roots need the form");
      if (!n)
        n = static_cast<int>(in.roots.front().size()) - 1;
      const QuadraticForm form(*in.phi, *n);
      std::vector<Root> roots;
      for (std::size_t i = 0; i < in.roots.size(); ++i) {
        const std::string field = "roots[" + std::to_string(i) + "]";
        if (in.roots[i].size() != form.size())
          throw ParseError(field, "expected " + std::to_string(form.size()) + " coordinates");
        try {
          roots.push_back(Root::make(form, in.roots[i]));
        } catch (const NonCoxeterAngle&) {
          throw;
        } catch (const Error& e) {
          throw ParseError(field, e.what());
        }
      }
      doc = document_from_roots(form, roots, 0);
    }
    doc.command = "check";
    return CommandResult{kExitOk, render(doc, format), {}};
  });
}

CommandResult cmd_certify(Coord phi, int dim, Format format) {
  return guarded([&] {
    const QuadraticForm form(phi, dim);
    ObstructionCertificate cert = certify_nonreflective(form);
    RunDocument doc = document_from_roots(form, cert.interim_roots, static_cast<std::size_t>(dim));
    doc.command = "certify-nonreflective";
    doc.certificate = std::move(cert);
    return CommandResult{kExitCertified, render(doc, format), {}};
  });
}

namespace {

nlohmann::ordered_json roots_json(const std::vector<Root>& roots) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& r : roots) {
    nlohmann::ordered_json v = nlohmann::ordered_json::array();
    for (Coord x : r.vector.coords())
      v.push_back(x);
    a.push_back({{"vector", v}, {"norm", r.norm}});
  }
  return a;
}

} // namespace

CommandResult cmd_oracle(Coord phi, int dim, Coord max_k0, std::size_t max_roots, Format format) {
  return guarded([&] {
    if (format == Format::Dot)
      throw ConfigError("the oracle report has no dot rendering");
    const OracleReport r = compare_with_oracle(QuadraticForm(phi, dim), max_k0, max_roots);
    const int code = r.identical() ? kExitOk : kExitError;
    if (format == Format::Json) {
      nlohmann::ordered_json j;
      j["form"] = {{"phi", phi}, {"dim", dim}};
      j["max_k0"] = max_k0;
      j["identical"] = r.identical();
      j["candidates"] = r.candidates;
      j["first_difference"] = r.first_difference ? nlohmann::ordered_json(*r.first_difference) : nullptr;
      j["engine"] = {{"verdict", to_string(r.engine_verdict)}, {"roots", roots_json(r.engine)}};
      j["oracle"] = {{"verdict", to_string(r.oracle_verdict)}, {"roots", roots_json(r.oracle)}};
      j["meta"] = {{"schema", kSchemaVersion}, {"version", VINBERG_VERSION}, {"command", "oracle"}};
      return CommandResult{code, j.dump(2) + "\n", {}};
    }
    std::ostringstream out;
    out << "phi " << phi << ", dim " << dim << ", max_k0 " << max_k0 << "\n";
    out << "brute-force candidates " << r.candidates << "\n";
    out << "engine  " << to_string(r.engine_verdict) << ", " << r.engine.size() << " roots\n";
    out << "oracle  " << to_string(r.oracle_verdict) << ", " << r.oracle.size() << " roots\n";
    for (std::size_t i = 0; i < std::max(r.engine.size(), r.oracle.size()); ++i) {
      const std::string e = i < r.engine.size() ? to_string(r.engine[i].vector) : "-";
      const std::string o = i < r.oracle.size() ? to_string(r.oracle[i].vector) : "-";
      out << (e == o ? "  " : "! ") << e << (e == o ? "" : "  vs  " + o) << "\n";
    }
    out << (r.identical() ? "identical\n" : "different\n");
    return CommandResult{code, out.str(), {}};
  });
}

} // namespace vinberg
