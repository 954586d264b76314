#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowform {

/// Command dispatch (args exclude the program name). Exit status: 0 success,
/// 1 validation or computation failure, 2 parse/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chowform
