#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohsys::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistent = 3;

/// Runs one command line (args excludes the program name). JSON goes to out,
/// diagnostics to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohsys::cli
