#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coadjoint::cli {

enum ExitCode : int {
    kSuccess = 0,
    kMalformedInput = 1,
    kOutOfCatalog = 2,
};

/// Runs the tool with `args` (program name excluded). Reports go to `out`,
/// one-line JSON error objects to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace coadjoint::cli
