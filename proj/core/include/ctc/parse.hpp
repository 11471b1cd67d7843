#pragma once

#include <string>
#include <string_view>

#include "ctc/polynomial.hpp"

namespace ctc {

// Parses the expression grammar:
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := ('+'|'-') factor | primary ('^' natural)?
//   primary := identifier | literal | '(' expr ')'
// with identifiers [a-z][a-z0-9]*, integer and fraction literals p/q, and
// insignificant whitespace. Every identifier must name a roster variable.
Polynomial parse_polynomial(std::string_view text, RosterPtr roster);

}  // namespace ctc
