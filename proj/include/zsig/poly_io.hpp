#ifndef ZSIG_POLY_IO_HPP
#define ZSIG_POLY_IO_HPP

#include <string>

#include "zsig/mpoly.hpp"

namespace zsig {

// Parses the shared polynomial text format: variables x1..x8 (aliases
// x, y, z when the ring has at most three variables), integer or rational
// coefficients like -3/4, '^' for powers, '*' optional between a
// coefficient and its monomial.  Throws SyntaxError (with position),
// UnknownVariable, or CoefficientNotInField.
MPoly parse_poly(const std::string& text, const RingSpec& ring);

// Canonical string form: graded-lex descending, explicit '*', rationals as
// a/b, zero as "0".  Round-trips through parse_poly.
std::string format_poly(const MPoly& h);

}  // namespace zsig

#endif
