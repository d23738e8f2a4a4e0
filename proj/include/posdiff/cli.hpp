#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posdiff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMathFail = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Returns 0 on success or pass, 1 when a
// mathematical check fails (a witness is printed), 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posdiff::cli
