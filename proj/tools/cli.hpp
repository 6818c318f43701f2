#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rgconj::cli {

/// Runs one command line. Exit status: 0 success, 1 domain error (one line
/// `error <Name>: <detail>` on `err`), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rgconj::cli
