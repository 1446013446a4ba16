#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs one `lix` invocation. `args` excludes the program name. Results go to
/// `out`; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lix::cli
