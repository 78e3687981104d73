#pragma once

// Square text format:
//
//   # optional comment lines
//   n
//   a11 a12 ... a1n
//   ...
//   an1 an2 ... ann
//
// Symbols are non-negative integers. Output is canonical: symbols renumbered
// 0.. by first occurrence in row-major order.

#include <iosfwd>
#include <string>

#include "gls/square.hpp"

namespace gls {

// Throws ParseError (line/column anchored, 1-based) or ValidationError.
Square parse_square(std::istream& in);
Square read_square_file(const std::string& path);

void write_square(std::ostream& out, const Square& square, const std::string& comment = {});
std::string format_square(const Square& square);
void write_square_file(const std::string& path, const Square& square, const std::string& comment = {});

}  // namespace gls
