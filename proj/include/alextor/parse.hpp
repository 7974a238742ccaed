#pragma once

// Literal syntax for cyclotomic numbers and Laurent polynomials:
//   "1/2 + 1/2*z^2", "t^2 - t + 1", "(z - 1)*t^-1", "2t(t-1)"
// `z` is the primitive root of the declared cyclotomic order, `t` the Laurent
// variable. Juxtaposition multiplies; `^` takes an integer exponent.

#include "alextor/laurent.hpp"

#include <string_view>

namespace alextor {

/// Throws InputError (with the column) on malformed text or a `t`.
CycloNumber parse_cyclo(std::string_view text, unsigned order);

/// Throws InputError if the value is not a Laurent polynomial.
LaurentPoly parse_laurent(std::string_view text, unsigned order);

RatFunc parse_ratfunc(std::string_view text, unsigned order);

} // namespace alextor
