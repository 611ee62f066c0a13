#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sv2::cli {

enum Exit : int {
	ok = 0,
	other = 1,
	parse = 2,
	axiom = 3,
	theorem = 4,
	needs_extension = 5,
};

/// args excludes the program name. Input is read from the named file, or
/// from `in` when no file (or "-") is given.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace sv2::cli
