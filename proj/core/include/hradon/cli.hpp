#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hradon {

/// Runs one command-line invocation. Exit code 0 on success or pass,
/// 1 on verification failure, 2 on usage errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hradon
