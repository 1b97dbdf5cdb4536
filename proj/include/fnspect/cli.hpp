#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fnspect::cli {

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name. Returns the process exit code: 0 on success, 1 on usage,
/// parse, or semantic errors, 2 on internal invariant violations.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fnspect::cli
