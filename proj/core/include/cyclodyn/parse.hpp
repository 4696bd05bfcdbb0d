#pragma once

#include <string>
#include <string_view>

#include "cyclodyn/cyclotomic.hpp"
#include "cyclodyn/poly.hpp"

namespace cyclodyn {

// Element syntax: integers, p/q, z(n) for zeta_n, ^ with an integer
// exponent, + - * /, parentheses and unary minus. Example: "1/2 + 3*z(5)^2".
// Throws ParseError with the failing offset.
CycloNum parse_element(std::string_view text);

// Text that parse_element maps back to the same value, written at the
// canonical conductor: terms "c*z(n)^j" over nonzero coordinates.
std::string to_string(const CycloNum& a);

std::string to_string(const CPoly& p);  // human-readable, variable X

}  // namespace cyclodyn
