#pragma once

// Code files: one codeword per line in the '0'/'1' rendering, b1 first.
// Lines starting with '#' are comments; blank lines are skipped; every
// codeword line must have the same length.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gfcodes/codes.hpp"

namespace gfcodes {

// ParseError::position() is the 1-based line number.
Code read_code(std::istream& in);
Code read_code_file(const std::filesystem::path& path);

// Comments are written as "# <text>" before the codewords.
void write_code(std::ostream& out, const Code& code, const std::vector<std::string>& comments = {});

}  // namespace gfcodes
