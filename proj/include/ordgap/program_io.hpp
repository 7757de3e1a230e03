#pragma once

// Line-oriented program files. `#` starts a comment. Sections may come in
// any order; each keyword is followed by whitespace-separated literals,
// which may continue over several lines:
//
//   ring int|rat|oddrat|poly|skew
//   rows M
//   cols N
//   A    M*N element literals, row-major
//   b    M literals
//   c    N literals
//   d    one literal
//
// Element literals follow parse_element's grammar for the file's ring.

#include <string>
#include <string_view>
#include <vector>

#include "ordgap/affine.hpp"

namespace ordgap {

/// Throws ParseError with the line and column of the offending token.
ProgramData parse_program(std::string_view text);

/// Canonical text; parse_program(serialize_program(p)) == p.
std::string serialize_program(const ProgramData& p);

/// Reads and parses a file; throws ParseError when it cannot be opened.
ProgramData load_program(const std::string& path);

/// Whitespace-separated element literals (the CLI's --x/--y lists).
RVector parse_vector(RingId ring, std::string_view text);

}  // namespace ordgap
