#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace nilcortex::testing {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the CLI with `args` (shell syntax), capturing stdout; stderr is discarded.
inline RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + NILCORTEX_CLI_PATH + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace nilcortex::testing
