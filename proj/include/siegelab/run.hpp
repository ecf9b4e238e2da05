#pragma once

#include <string>
#include <vector>

namespace siegelab::cli {

/// Executes a command line (without argv[0]); returns the process exit
/// status. All artifact output goes under the --out directory. Exposed as a
/// library call so tests can re-run commands and compare artifact bytes.
int run(const std::vector<std::string>& args);

} // namespace siegelab::cli
