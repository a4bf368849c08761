#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace evo {

// Runs one subcommand (type, series, classify, iso, family, dot, decompose).
// Returns 0 on success, 1 on domain errors and 2 on usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evo
