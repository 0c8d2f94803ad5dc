#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace akshar {

// Exit codes: 0 success, 1 data error (message on err names the error kind
// and byte offset), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace akshar
