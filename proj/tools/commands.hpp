// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vve::cli {

/// Exit codes: 0 success, 1 model/data error (message carries the error
/// code), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for in-process callers.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vve::cli
