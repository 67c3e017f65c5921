#include "omegalim/cli.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "omegalim/chains.hpp"
#include "omegalim/engine.hpp"
#include "omegalim/errors.hpp"
#include "omegalim/fit.hpp"
#include "omegalim/parse.hpp"
#include "omegalim/render.hpp"
#include "omegalim/tower.hpp"

namespace omegalim {

namespace {

using nlohmann::json;

const char* command_name(Command c) {
  switch (c) {
    case Command::Limit: return "limit";
    case Command::Lead: return "lead";
    case Command::Compare: return "compare";
    case Command::Table: return "table";
    case Command::Eval: return "eval";
    case Command::Fit: return "fit";
    case Command::Check: return "check";
  }
  return "?";
}

// Payload shared by the text and JSON writers.
struct Payload {
  std::string result;
  std::vector<std::pair<std::string, std::string>> terms;  // (coeff, proto)
  json diagnostics = json::object();
  std::vector<std::string> text_lines;  // extra lines for text mode
};

void require_args(const CommandRequest& req, std::size_t count) {
  if (req.args.size() != count)
    throw UndefinedError(std::string(command_name(req.command)) + " takes " +
                         std::to_string(count) + " argument(s)");
}

Payload run_limit(const CommandRequest& req, const EngineOptions& eopts,
                  const RenderOptions& ropts) {
  require_args(req, 1);
  SeqExprPtr ast = parse_expr(req.args[0], ParseContext::Sequence);
  InNumber x = limit_of(ast, req.depth, eopts);
  Limit series = truncate(x, req.depth);
  Payload p;
  p.result = render(series, ropts);
  bool exact_coeffs = true;
  for (const auto& t : series.terms()) {
    p.terms.emplace_back(t.coeff().str(), render(t.proto(), ropts));
    exact_coeffs = exact_coeffs && t.coeff().exact();
  }
  p.diagnostics["ratio"] = render(x, ropts);
  p.diagnostics["depth"] = req.depth;
  p.diagnostics["exact_coefficients"] = exact_coeffs;
  p.text_lines.push_back("ratio: " + render(x, ropts));
  return p;
}

Payload run_lead(const CommandRequest& req, const EngineOptions& eopts,
                 const RenderOptions& ropts) {
  require_args(req, 1);
  SeqExprPtr ast = parse_expr(req.args[0], ParseContext::Sequence);
  auto lead = leading_term_limit(ast, eopts);
  Payload p;
  if (!lead) {
    p.result = "0";
  } else {
    p.result = render(*lead, ropts);
    p.terms.emplace_back(lead->coeff().str(), render(lead->proto(), ropts));
  }
  return p;
}

Payload run_compare(const CommandRequest& req, const EngineOptions& eopts,
                    const RenderOptions& ropts) {
  require_args(req, 2);
  InNumber a = parse_class_value(req.args[0], req.depth, eopts);
  InNumber b = parse_class_value(req.args[1], req.depth, eopts);
  auto pa = as_prototype(a);
  auto pb = as_prototype(b);
  Payload p;
  if (pa && pb) {
    p.result = to_symbol(compare(*pa, *pb));
    p.diagnostics["mode"] = "class";
  } else {
    p.result = to_symbol(in_compare(a, b));
    p.diagnostics["mode"] = "value";
  }
  p.diagnostics["lhs"] = render(a, ropts);
  p.diagnostics["rhs"] = render(b, ropts);
  return p;
}

Payload run_table(const CommandRequest& req, const RenderOptions& ropts) {
  auto chain = generation_chain(req.generation);
  Payload p;
  std::string joined;
  for (const auto& proto : chain) {
    std::string s = render(proto, ropts);
    if (!joined.empty()) joined += " < ";
    joined += s;
    p.text_lines.push_back(s);
  }
  p.result = joined;
  p.diagnostics["generation"] = req.generation;
  p.diagnostics["entries"] = chain.size();
  return p;
}

Payload run_eval(const CommandRequest& req) {
  require_args(req, 1);
  SeqExprPtr ast = parse_expr(req.args[0], ParseContext::Sequence);
  TowerValue v = eval_seq(ast, req.eval_at);
  Payload p;
  p.result = render(v);
  p.diagnostics["n"] = req.eval_at;
  p.diagnostics["height"] = v.height();
  p.diagnostics["mantissa"] = v.mantissa();
  p.diagnostics["sign"] = v.sign();
  return p;
}

Payload run_fit(const CommandRequest& req, const EngineOptions& eopts,
                const RenderOptions& ropts) {
  require_args(req, 1);
  std::ifstream in(req.args[0]);
  if (!in) throw UndefinedError("cannot read sample file '" + req.args[0] + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<Sample> samples = parse_samples(buf.str());
  if (req.candidates.empty())
    throw UndefinedError("fit needs --candidates \"p1,p2,...\"");
  std::vector<Prototype> candidates;
  for (const auto& c : req.candidates)
    candidates.push_back(parse_prototype(c, req.depth, eopts));
  FitResult fit = estimate_leading_term(samples, candidates);
  Payload p;
  std::ostringstream os;
  os << fit.coefficient << " * " << render(fit.proto, ropts);
  p.result = os.str();
  json report = json::array();
  for (const auto& c : fit.report) {
    report.push_back({{"proto", render(c.proto, ropts)},
                      {"coefficient", c.coefficient},
                      {"drift", c.drift},
                      {"usable", c.usable}});
    std::ostringstream line;
    line << "candidate " << render(c.proto, ropts) << ": ";
    if (c.usable)
      line << "coefficient " << c.coefficient << ", drift " << c.drift;
    else
      line << "not evaluable on the sample tail";
    p.text_lines.push_back(line.str());
  }
  p.diagnostics["report"] = report;
  p.diagnostics["samples"] = samples.size();
  return p;
}

Payload run_check(const CommandRequest& req, const EngineOptions& eopts,
                  const RenderOptions& ropts) {
  require_args(req, 2);
  Prototype a = parse_prototype(req.args[0], req.depth, eopts);
  Prototype b = parse_prototype(req.args[1], req.depth, eopts);
  std::vector<std::uint64_t> schedule =
      req.schedule.empty() ? default_schedule() : req.schedule;
  NumericComparison nc = numeric_compare(a, b, schedule);
  Ordering sym = compare(a, b);
  Payload p;
  bool agree = nc.stable && nc.verdict == sym;
  p.result = std::string(to_symbol(nc.verdict)) +
             (nc.stable ? " (stable" : " (unstable") +
             (agree ? ", agrees with symbolic " : ", symbolic ") +
             to_symbol(sym) + ")";
  json pts = json::array();
  for (const auto& s : nc.samples) {
    pts.push_back({{"n", s.n},
                   {"ordering", to_symbol(s.ordering)},
                   {"resolved", s.resolved}});
    std::ostringstream line;
    line << "n = " << s.n << ": "
         << (s.resolved ? to_symbol(s.ordering) : "unresolved");
    p.text_lines.push_back(line.str());
  }
  p.diagnostics["samples"] = pts;
  p.diagnostics["stable"] = nc.stable;
  p.diagnostics["symbolic"] = to_symbol(sym);
  p.diagnostics["agrees"] = agree;
  return p;
}

std::string write_text(const Payload& p) {
  std::string out = p.result + "\n";
  for (const auto& line : p.text_lines) out += line + "\n";
  return out;
}

std::string write_json(const CommandRequest& req, const Payload& p) {
  json terms = json::array();
  for (const auto& [coeff, proto] : p.terms)
    terms.push_back({{"coeff", coeff}, {"proto", proto}});
  json j = {{"command", command_name(req.command)},
            {"input", req.args},
            {"result", p.result},
            {"terms", terms},
            {"diagnostics", p.diagnostics}};
  return j.dump(2) + "\n";
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const OscillatoryError*>(&e)) return kExitOscillatory;
  if (dynamic_cast<const NoStableCandidate*>(&e)) return kExitNoFit;
  return kExitUndefined;  // undefined / domain / tower / feedback
}

}  // namespace

RunResult run(const CommandRequest& req) {
  if (req.depth < 1)
    return {kExitUndefined, "error: depth must be at least 1\n"};
  EngineOptions eopts{req.round_constants};
  RenderOptions ropts{req.unicode};
  try {
    Payload p;
    switch (req.command) {
      case Command::Limit: p = run_limit(req, eopts, ropts); break;
      case Command::Lead: p = run_lead(req, eopts, ropts); break;
      case Command::Compare: p = run_compare(req, eopts, ropts); break;
      case Command::Table: p = run_table(req, ropts); break;
      case Command::Eval: p = run_eval(req); break;
      case Command::Fit: p = run_fit(req, eopts, ropts); break;
      case Command::Check: p = run_check(req, eopts, ropts); break;
    }
    return {kExitOk, req.output == OutputMode::Json ? write_json(req, p)
                                                    : write_text(p)};
  } catch (const Error& e) {
    int code = exit_code_for(e);
    if (req.output == OutputMode::Json) {
      json j = {{"command", command_name(req.command)},
                {"input", req.args},
                {"result", nullptr},
                {"terms", json::array()},
                {"diagnostics", {{"error", e.what()}, {"exit_code", code}}}};
      return {code, j.dump(2) + "\n"};
    }
    return {code, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace omegalim
