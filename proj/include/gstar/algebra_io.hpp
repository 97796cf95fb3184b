#ifndef GSTAR_ALGEBRA_IO_HPP
#define GSTAR_ALGEBRA_IO_HPP

#include "gstar/algebra.hpp"

#include <iosfwd>
#include <string>

namespace gstar {

// Interchange format (JSON):
//   { "name": str, "group": [m1,...], "dim": d, "basis": [labels],
//     "grading": [[exponents]...], "involution": [[rational strings]] (d x d,
//     column j = image of b_j), "products": [[i, j, k, "p/q"], ...],
//     "unit": [rational strings] (optional) }
// Indices 0-based, rationals as "p" or "p/q". Throws ParseError on bad input.
GStarAlgebra algebra_from_json_text(const std::string& text);
GStarAlgebra algebra_from_file(const std::string& path);

std::string algebra_to_json_text(const GStarAlgebra& a);

} // namespace gstar

#endif
