#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fairdiv {

// Whole command surface behind one callable so tests can drive it in-process.
// Subcommands: solve, check, sperner, gen, oracle. Exit codes: 0 success or
// holds, 1 malformed input or bad usage, 2 valuation-class or precondition
// error, 3 scale or enumeration budget, 4 failed check or no witness.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace fairdiv
