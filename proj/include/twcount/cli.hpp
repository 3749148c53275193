#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twc::cli {

// Runs one command given argv-style arguments (program name excluded),
// writing the report to out and diagnostics to err. Returns the process
// exit code: 0 on success, 1 for domain errors and verification mismatches,
// 2 for usage, file, and parse errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace twc::cli
