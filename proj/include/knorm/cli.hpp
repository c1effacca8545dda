#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knorm::cli {

// Exit codes (the machine contract; text output may evolve):
//   0  success / element is a norm
//   10 computed: element is NOT a norm
//   2  malformed input (files, records, flags)
//   3  mathematical precondition violated
//   4  irreducibility-inconsistency witness detected
inline constexpr int kExitNotNorm = 10;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInconsistency = 4;

// Runs one command; `args` excludes the program name.  Results go to `out`,
// diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace knorm::cli
