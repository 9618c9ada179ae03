#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kron {

/// Runs one CLI invocation. Exit status: 0 success, 1 input/usage error,
/// 2 resource-guard trip.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kron
