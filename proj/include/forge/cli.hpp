#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace forge {

// Command-line surface. Exit codes: 0 = requested checks pass, 1 = a property
// failed (report emitted), 2 = usage or I/O error, 3 = search budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace forge
