#pragma once

#include "legseq/poly.hpp"

#include <string_view>

namespace legseq::ff {

/// Parses polynomial text over F_p. Accepted forms:
///   sums of terms `c`, `x`, `c*x`, `cx`, `x^e`, `c*x^e` with signs and
///   whitespace, e.g. "x^6-4x^3+3"; or an ascending coefficient list "[1,3,1]".
/// Integer coefficients are reduced mod p. Throws ParseError.
[[nodiscard]] Poly parse_poly(std::string_view text, const PrimeModulus& p);

} // namespace legseq::ff
