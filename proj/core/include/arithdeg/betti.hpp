#ifndef ARITHDEG_BETTI_HPP
#define ARITHDEG_BETTI_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

namespace arithdeg {

/// Graded Betti numbers beta_{i,j} of S/I over a ring with `nvars`
/// variables. Derived invariants follow the usual conventions: the
/// projective dimension is the last nonzero column, reg(S/I) is the largest
/// j - i, and depth S/I = nvars - pd by Auslander-Buchsbaum.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::size_t nvars) : nvars_(nvars) {}

  void add(int i, std::int64_t j, long count);
  long at(int i, std::int64_t j) const;
  long total(int i) const;

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<std::pair<int, std::int64_t>, long>& entries() const noexcept {
    return entries_;
  }
  bool empty() const noexcept { return entries_.empty(); }

  int projective_dimension() const;
  /// reg(S/I) = max{ j - i : beta_{i,j} != 0 }.
  std::int64_t regularity() const;
  int depth() const;

  /// Macaulay2-style grid: columns are i, rows are j - i.
  std::string render() const;
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t nvars_ = 0;
  std::map<std::pair<int, std::int64_t>, long> entries_;
};

}  // namespace arithdeg

#endif  // ARITHDEG_BETTI_HPP
