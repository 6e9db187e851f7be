#pragma once

#include <string>

namespace mignotte {

struct ProcessResult {
  int exit_code = -1; // 128 + signal when terminated by a signal
  bool timed_out = false;
  std::string out;
  std::string err;
};

// Runs `command` through /bin/sh -c, feeding stdin_data on standard input
// and capturing both output streams. Kills the process group after
// timeout_seconds of wall clock. Throws Error(io_error) on plumbing
// failures (pipe/fork), never on nonzero exit.
ProcessResult run_process(const std::string& command,
                          const std::string& stdin_data,
                          double timeout_seconds);

} // namespace mignotte
