#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace f2a::cli {

// Full command-line surface.  Exit code 0 on success / pass, 1 on negative
// verdicts (not Frobenius, failed checks, no-match classifications), 2 on
// usage and parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f2a::cli
