#include "arithdeg/linalg.hpp"

#include <utility>

namespace arithdeg {

std::size_t matrix_rank(const Field& field, DenseMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && Field::is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Coeff inv = field.inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (Field::is_zero(rows[r][c])) continue;
      const Coeff factor = field.mul(rows[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = field.sub(rows[r][k], field.mul(factor, rows[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace arithdeg
