#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drops {

/// Full command-line entry point, testable in-process. `args` is
/// argv[1..]: a subcommand followed by an optional config file path and
/// `--key value` overrides. Returns the process exit code: 0 success,
/// 2 configuration error, 3 numerical failure, 4 property-suite failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace drops
