#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homocyl {

// Command-line front end; args exclude the program name.
// Exit codes: 0 success, 1 obstruction/mismatch verdict under --strict,
// 2 malformed or mathematically inadmissible input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homocyl
