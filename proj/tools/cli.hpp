#pragma once

#include <string>
#include <vector>

namespace fucik::cli {

enum ExitCode : int { kOk = 0, kPrecondition = 2, kNumerical = 3, kIo = 4, kInternal = 1 };

const char* tool_version();

/// Entry point of the fucik tool; returns the process exit status.
int run(int argc, const char* const* argv);
/// Same, with argv[0] supplied.
int run(const std::vector<std::string>& args);

}  // namespace fucik::cli
