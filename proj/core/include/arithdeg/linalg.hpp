#ifndef ARITHDEG_LINALG_HPP
#define ARITHDEG_LINALG_HPP

#include <cstddef>
#include <vector>

#include "arithdeg/field.hpp"

namespace arithdeg {

using DenseMatrix = std::vector<std::vector<Coeff>>;

/// Rank over `field` by Gaussian elimination. All rows have equal length.
std::size_t matrix_rank(const Field& field, DenseMatrix rows);

}  // namespace arithdeg

#endif  // ARITHDEG_LINALG_HPP
