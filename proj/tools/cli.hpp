#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace tww::cli {

enum ExitCode { kOk = 0, kInputError = 2, kBudgetError = 3, kCertificateViolation = 4 };

// Runs one command line; results go to `out`, machine-readable failures to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tww::cli
