#ifndef NDL_CLI_HPP
#define NDL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ndl {

// Exit codes: 0 success / EQUAL; 1 UNEQUAL, NOT_EQUIVALENT or
// verification mismatch; 2 DIAMETER_VIOLATION; 64 usage; 65 bad input
// data; 74 I/O.
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitIo = 74;

// Batch entry point shared by the binary and the tests. `args` excludes
// the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ndl

#endif
