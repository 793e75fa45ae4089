#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace lambda {

// Runs one CLI invocation. args are argv-style arguments without the
// program name. Exit codes: 0 = success / boolean true, 1 = boolean
// false, 2 = parse or usage error (diagnostic on err).
int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace lambda
