#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfga::cli {

/// Runs the command-line front end on already-split arguments (no program
/// name) and returns the process exit status: 0 on success or an all-pass
/// verification, 1 on a check/search/verify failure or an exhausted search
/// budget, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cfga::cli
