#ifndef ARITHDEG_PARSE_HPP
#define ARITHDEG_PARSE_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "arithdeg/poly.hpp"

namespace arithdeg {

/// Parses `term (('+'|'-') term)*` where a term is an optional coefficient
/// followed by '*'-separated factors `var` or `var^exp`. Coefficients are
/// integers or integer fractions `a/b`; the '*' after a coefficient may be
/// omitted. Errors are ParseError with the column (plus `line` if given).
Poly parse_poly(std::string_view text, const RingPtr& ring,
                std::size_t line = 0, std::size_t column_offset = 0);

/// Comma-separated list of polynomials; an empty or blank string is an
/// empty list.
std::vector<Poly> parse_poly_list(std::string_view text, const RingPtr& ring,
                                  std::size_t line = 0,
                                  std::size_t column_offset = 0);

}  // namespace arithdeg

#endif  // ARITHDEG_PARSE_HPP
