#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "omegalim/cli.hpp"

namespace {

int resolved_default_depth() {
  if (const char* env = std::getenv("OMEGALIM_DEPTH")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1000) return static_cast<int>(v);
    std::fprintf(stderr, "warning: ignoring invalid OMEGALIM_DEPTH '%s'\n", env);
  }
  return 4;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      if (start < s.size()) out.push_back(s.substr(start));
      break;
    }
    if (comma > start) out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using omegalim::Command;
  using omegalim::CommandRequest;

  CLI::App app{"omegalim - exact arithmetic and ordering for asymptotic "
               "growth classes"};
  app.require_subcommand(1);

  CommandRequest req;
  req.depth = resolved_default_depth();
  bool json_out = false;
  std::string expr, lhs, rhs, file, candidates, schedule;

  app.add_flag("--json", json_out, "machine-readable JSON output");
  app.add_flag("--unicode", req.unicode, "render the base element as a Greek omega");
  app.add_flag("!--exact-constants", req.round_constants,
               "reject irrational constants instead of rounding them");

  auto* limit = app.add_subcommand("limit", "expansion of a sequence's limit");
  limit->add_option("expr", expr, "sequence expression in n")->required();
  limit->add_option("--depth", req.depth, "number of expansion terms");

  auto* lead = app.add_subcommand("lead", "leading term of a sequence's limit");
  lead->add_option("expr", expr, "sequence expression in n")->required();

  auto* cmp = app.add_subcommand("compare", "order two class expressions");
  cmp->add_option("lhs", lhs, "class expression in w")->required();
  cmp->add_option("rhs", rhs, "class expression in w")->required();
  cmp->add_option("--depth", req.depth, "expansion depth for series steps");

  auto* table = app.add_subcommand("table", "ordering chain of a generation");
  table->add_option("--generation", req.generation, "1, 2, or 3")
      ->check(CLI::Range(1, 3));

  auto* eval = app.add_subcommand("eval", "numeric value at a finite index");
  eval->add_option("expr", expr, "sequence expression in n")->required();
  eval->add_option("--at", req.eval_at, "index n")->required();

  auto* fit = app.add_subcommand("fit", "estimate the leading term of samples");
  fit->add_option("file", file, "CSV 'n,value' lines or a JSON array")
      ->required();
  fit->add_option("--candidates", candidates,
                  "comma-separated candidate prototypes in w")
      ->required();

  auto* check = app.add_subcommand(
      "check", "numeric ordering along a schedule vs the symbolic order");
  check->add_option("lhs", lhs, "prototype expression in w")->required();
  check->add_option("rhs", rhs, "prototype expression in w")->required();
  check->add_option("--schedule", schedule, "comma-separated indices");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  req.output = json_out ? omegalim::OutputMode::Json : omegalim::OutputMode::Text;
  if (limit->parsed()) {
    req.command = Command::Limit;
    req.args = {expr};
  } else if (lead->parsed()) {
    req.command = Command::Lead;
    req.args = {expr};
  } else if (cmp->parsed()) {
    req.command = Command::Compare;
    req.args = {lhs, rhs};
  } else if (table->parsed()) {
    req.command = Command::Table;
  } else if (eval->parsed()) {
    req.command = Command::Eval;
    req.args = {expr};
  } else if (fit->parsed()) {
    req.command = Command::Fit;
    req.args = {file};
    req.candidates = split_list(candidates);
  } else if (check->parsed()) {
    req.command = Command::Check;
    req.args = {lhs, rhs};
    for (const auto& tok : split_list(schedule)) {
      char* end = nullptr;
      double v = std::strtod(tok.c_str(), &end);
      if (!end || *end != '\0' || v < 3) {
        std::fprintf(stderr, "error: bad schedule entry '%s'\n", tok.c_str());
        return omegalim::kExitParse;
      }
      req.schedule.push_back(static_cast<std::uint64_t>(v));
    }
  }

  omegalim::RunResult result = omegalim::run(req);
  std::fputs(result.output.c_str(), stdout);
  return result.exit_code;
}
