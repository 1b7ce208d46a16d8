#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace holecert::tools {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

// Runs the holecert command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holecert::tools
