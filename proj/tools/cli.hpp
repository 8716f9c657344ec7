#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace romdom {

// Dispatches a full command line. Exit status: 0 for success or a yes
// answer, 1 for a no answer (failed check, infeasible extension, budget
// exceeded), 2 for usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace romdom
