#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace groupfair {

// All verdict-relevant arithmetic is exact. Rationals are kept in canonical
// reduced form with a positive denominator (GMP maintains this after
// canonicalize()).
using Rational = mpq_class;

// Parses "p" or "p/q" with optional leading '-' on p; q must be a positive
// integer. Anything else (whitespace, decimals, signs on q) is rejected.
// Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

}  // namespace groupfair
