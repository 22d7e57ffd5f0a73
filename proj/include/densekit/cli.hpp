#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace densekit {

// Entry point of the `densekit` tool. `args` excludes the program name.
// Returns 0 on success, 1 on input errors, 2 when a solver refuses the input.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace densekit
