#pragma once

#include <istream>
#include <string>
#include <vector>

namespace sl3web::cli {

// exit_code: 0 success, 1 validation or membership failure, 2 malformed input.
// payload is a single JSON document (newline terminated) unless help was
// requested. When --out was given the payload has already been written there.
struct CommandResult {
  int exit_code = 0;
  std::string payload;
  std::string out_path;
};

// `args` excludes the program name. `in` is read when a subcommand takes its
// input from stdin (no --in, or --in -).
CommandResult run(const std::vector<std::string>& args, std::istream& in);

}  // namespace sl3web::cli
