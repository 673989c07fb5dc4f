#ifndef HYPTORSION_CLI_HPP
#define HYPTORSION_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hyptorsion::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyptorsion::cli

#endif
