#pragma once

#include <ostream>

namespace denominal::cli {

/// Exit codes.
enum Exit : int { kOk = 0, kUsage = 1, kDataError = 2, kStatistical = 3 };

/// Entry point of the `denominal` tool; writes messages to out / err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace denominal::cli
