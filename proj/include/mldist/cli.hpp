#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mldist {

// Entry point behind the command-line tool. Returns 0 on success with a
// witness, 1 when the answer is NONE (no master list, budget exceeded, no
// feasible matching), 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mldist
