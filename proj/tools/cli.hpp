#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relcm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;  // a mathematical precondition does not hold
inline constexpr int kExitInput = 2;     // bad arguments, unreadable file, malformed module
inline constexpr int kExitInternal = 3;  // an engine invariant failed

/// Runs one rcmtool invocation; args excludes the program name. The report
/// goes to out, diagnostics to err.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relcm::cli
