#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mmk::cli {

/// Runs `mmk <subcommand> ...` with argv[0] omitted. Data goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when verify or
/// `invariants check` finds a violation, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmk::cli
