// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semilinear::cli {

/// Runs one `semilin` invocation. args excludes the program name. Results
/// go to `out`, errors to `err` as a single-line JSON object, and the
/// return value is the process exit code:
///   0 success, 1 invalid input or usage, 2 resource limit, 3 violated bound.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace semilinear::cli
