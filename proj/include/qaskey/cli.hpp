#pragma once

/// \file
/// Batch driver behind the `qaskey` executable.
///
/// Exit codes: 0 success, 1 a verification did not meet its tolerance,
/// 2 invalid command line or parameters, 3 numeric error (the message names
/// the error kind).

#include <iosfwd>
#include <string>
#include <vector>

namespace qaskey {

/// `args` excludes the program name. Reports go to `out` unless --output
/// names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qaskey
