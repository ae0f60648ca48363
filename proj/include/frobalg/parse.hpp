#pragma once

#include <string>

#include "frobalg/ideal.hpp"

namespace frobalg {

// Ideal text grammar:
//   ideal    := monomial (',' monomial)*
//   monomial := factor ('*' factor)*
//   factor   := 'x' INT ('^' INT)?
// Whitespace is insignificant. Variables are x1..xn; n is inferred as the
// largest index unless given explicitly (then indices must not exceed it).
MonomialIdeal parse_ideal(const std::string& text, int n = 0);

std::string variable_name(int i);  // 0-based index -> "x1", "x2", ...

std::string to_string(const Monomial& m);
std::string to_string(const SymbolicMonomial& m);  // exponents print as ^q / ^(q-1)
std::string to_string(const MonomialIdeal& I);
std::string to_string(const SymbolicIdeal& I);

}  // namespace frobalg
