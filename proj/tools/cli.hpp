#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mollint::cli {

// Runs the command line in `args` (without the program name). JSON verdicts and
// reports go to `out`, one-line "error: <kind>: <message>" failures to `err`.
// Returns 0 iff every requested verdict passes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mollint::cli
