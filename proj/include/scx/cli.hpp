#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace scx {

// Exit status: 0 success, 1 usage or input error, 2 validation failure.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scx
