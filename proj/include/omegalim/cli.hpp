#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace omegalim {

enum class Command { Limit, Lead, Compare, Table, Eval, Fit, Check };
enum class OutputMode { Text, Json };

struct CommandRequest {
  Command command = Command::Limit;
  std::vector<std::string> args;  // positional arguments
  int depth = 4;
  OutputMode output = OutputMode::Text;
  bool unicode = false;
  bool round_constants = true;
  std::uint64_t eval_at = 1000000;        // eval --at
  std::vector<std::string> candidates;    // fit --candidates
  std::vector<std::uint64_t> schedule;    // check --schedule (empty: default)
  int generation = 2;                     // table --generation
};

// Exit codes reported by run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;       // parse or context error
inline constexpr int kExitOscillatory = 3;
inline constexpr int kExitUndefined = 4;   // undefined value / domain error
inline constexpr int kExitNoFit = 5;       // no stable fit candidate

struct RunResult {
  int exit_code = 0;
  std::string output;  // rendered text or JSON, newline-terminated
};

RunResult run(const CommandRequest& req);

}  // namespace omegalim
