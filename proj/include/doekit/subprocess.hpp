#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace doekit {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;

  bool ok() const { return exit_code == 0; }
};

struct RunOptions {
  std::optional<std::string> cwd;
  // When set, the child's stdin is redirected from this file. Avoids the
  // write/read deadlock a pipe would have on large batch inputs.
  std::optional<std::string> stdin_file;
  std::map<std::string, std::string> extra_env;
};

// Executes argv[0] with the given arguments, capturing stdout and stderr.
// Throws doekit::Error(IoError) if the process cannot be spawned at all.
RunResult run_process(const std::vector<std::string>& argv,
                      const RunOptions& options = {});

} // namespace doekit
