#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace scflip::cli {

// Exit codes.
inline constexpr int kOk = 0, kFailure = 1, kUsage = 2, kSkippedOnly = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scflip::cli
