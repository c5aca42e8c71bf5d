// Command-line front end. run() is the whole CLI behind a testable surface:
// exit code 0 on success, 1 on domain errors, 2 on usage errors; all results
// are JSON on the output stream.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vknot::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vknot::cli
