#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mignotte::cli {

// Full command-line surface behind the mignotte binary. `args` excludes the
// program name. Exit codes: 0 success, 1 domain or usage error, 2 I/O error,
// 3 empty result, 4 solver unavailable.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace mignotte::cli
