#pragma once

#include <string>

#include "dwa/algebra.hpp"

namespace dwa {

// Recursive-descent elaboration of the expression grammar
//
//   expr   := ('-')? term (('+'|'-') term)*
//   term   := (integer)? factor+ | integer
//   factor := 'e' '(' seq ')' | ('x'|'psi') '@' int | 'E' '(' int ')' '@' int
//           | 'D' ('^' int)? '(' expr ')' | '(' expr ')'
//
// Juxtaposition (or '*') multiplies with the left factor on top. Bare
// generators like x@1 elaborate against the unit, i.e. sum over all
// idempotents. D^k applies the flavor's derivation k times.
// Throws parse_error with a byte offset on bad input.
Element parse_expression(const std::string& text, const Flavor& flavor, const PrimeConfig& cfg);

// Deterministic text form that parses back to an equal element.
std::string print_element(const Element& elem);

}  // namespace dwa
