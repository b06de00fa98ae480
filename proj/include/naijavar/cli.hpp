#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace naijavar::cli {

// Runs the command line `args` (program name excluded) and returns the exit
// code: 0 on success, 2 for usage and validation errors, 1 for runtime errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// X-SAMPA-style ASCII spelling of an inventory symbol.
std::string ascii_symbol(std::string_view symbol);

}  // namespace naijavar::cli
