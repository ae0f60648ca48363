#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobalg {

// Exit codes: 0 success, 2 parse/usage error, 3 precondition violation,
// 4 internal invariant failure.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace frobalg
