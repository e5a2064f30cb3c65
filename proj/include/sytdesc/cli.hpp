#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sytdesc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Records go to out as JSON lines (or CSV /
// text where requested); error records go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sytdesc::cli
