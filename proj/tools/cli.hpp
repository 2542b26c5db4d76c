#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinl::cli {

// Runs one subcommand; argv excludes the program name. Writes JSON to out.
// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int dispatch(const std::vector<std::string>& argv, std::ostream& out);

}  // namespace spinl::cli
