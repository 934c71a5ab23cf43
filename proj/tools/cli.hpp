#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace interdec::cli {

// Exit status contract shared by every subcommand.
enum ExitCode : int {
  kVerdictTrue = 0,
  kVerdictFalse = 1,
  kInputError = 2,
  kLimitExceeded = 3,
  kInternalContradiction = 4,
};

enum class Command { Check, Decompose, Interactions };

struct Invocation {
  Command command = Command::Check;
  std::string input_path;
  std::string property = "C";  // C | I | sI
  std::size_t cap = 4096;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> field;
  std::optional<std::string> output_path;
  std::optional<std::string> export_path;
  bool emit_bases = false;
  bool pretty = false;
};

/// Parses argv and runs one subcommand. The document goes to `out` (or
/// --output), diagnostics to `err`; the return value is the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes an already parsed invocation.
int execute(const Invocation& inv, std::ostream& out, std::ostream& err);

}  // namespace interdec::cli
