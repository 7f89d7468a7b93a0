#pragma once

#include <string>
#include <string_view>

#include "genrig/bracket.hpp"

namespace genrig {

// Text form of a bracket polynomial:
//
//   [1,3,4,5][2,4,6,7] - [1,2,4,5][3,4,6,7] + 2[1,2,3,4][4,5,6,7]
//
// Terms are separated by '+' or '-'; a term is an optional coefficient
// (integer or "p/q", optionally followed by '*') and a product of brackets.
// Bracket entries are separated by commas or blanks and may come in any order;
// they are sign-normalised on input. "0" is the zero polynomial.
BracketPolynomial parse_polynomial(std::string_view text);

// Largest tableau first. parse_polynomial(format_polynomial(p)) == p.
std::string format_polynomial(const BracketPolynomial& p);

}  // namespace genrig
