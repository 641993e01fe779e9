#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ufx::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (args excludes the program name) and returns the
/// process status: 0 success or all checks passed, 1 a check failed, 2
/// usage or input error (diagnostic on err).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Which library operations a subcommand exercises; the coverage test runs
/// every example and compares the union against the library surface.
struct Coverage {
    std::string operation;
    std::vector<std::string> example;  // argv for dispatch; "{model}" etc. are placeholders
};
const std::vector<Coverage>& coverage();

} // namespace ufx::cli
