#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fusion::cli {

enum ExitCode { Pass = 0, ViolationFound = 1, UsageError = 2, InputFailure = 3 };

// args excludes the program name. Reads "-" inputs from in.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

// "C9", "C3xC3", "C3^2", "C2 x C4" -> cyclic factor orders.
std::vector<std::uint64_t> parseGroupSpec(const std::string& spec);

}  // namespace fusion::cli
