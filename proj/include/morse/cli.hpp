#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace morse {

/// Runs one subcommand; args excludes the program name. Returns the exit code:
/// 0 success, 1 domain/format/io error (JSON object on err), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morse
