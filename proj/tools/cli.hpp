#pragma once

#include <string>
#include <vector>

namespace mukai::cli {

enum ExitCode : int { Ok = 0, Internal = 1, Parse = 2, Domain = 3, Unsupported = 4 };

struct Options {
  std::string command;        ///< empty: taken from the document's "command" field
  bool oracle = false;        ///< brute-force cross-check (only in oracle builds)
};

struct Result {
  int exit_code = Ok;
  std::string out;  ///< JSON report
  std::string err;  ///< JSON diagnostic when exit_code != 0
  std::string svg;  ///< plot-cone only
};

/// Run one invocation on the text of an input document.
Result run_command(const std::string& input, const Options& options);

const std::vector<std::string>& command_names();

bool oracle_available();

}  // namespace mukai::cli
