#pragma once

#include <string>
#include <vector>

#include "cotilt/io.hpp"

namespace cotilt::cli {

enum class Status { Ok, Violation, Error };

std::string status_name(Status s);

/// Outcome of one command: human-readable lines and a JSON payload carrying
/// the same information. The payload always has a "status" member.
struct CommandReport {
  Status status = Status::Ok;
  std::vector<std::string> lines;
  io::Json payload;
  /// Set by --json; selects which of the two renderings is printed.
  bool json_output = false;

  /// 0 for ok, 1 for a violation or a false verdict, 2 for an input error.
  int exit_code() const;
  std::string render() const;
};

/// Parses argv (program name first) and runs the named subcommand. Never
/// throws for bad input; errors are reported with status Error.
CommandReport run(const std::vector<std::string>& argv);

}  // namespace cotilt::cli
