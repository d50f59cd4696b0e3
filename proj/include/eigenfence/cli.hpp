#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eigenfence::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on
/// success, 2 for unusable input (parse, dimension, eigenpair validation,
/// bad flags) and 1 when a computation rejects well-formed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eigenfence::cli
