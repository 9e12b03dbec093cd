#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fakequad::cli {

/// Runs one invocation; `args` excludes the program name. Returns 0 iff
/// every requested check passed, 1 on a failed check, 2 on usage or input
/// errors (reported on `err`).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fakequad::cli
