#include "arithdeg/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "arithdeg/error.hpp"

namespace arithdeg {

void BettiTable::add(int i, std::int64_t j, long count) {
  if (count == 0) return;
  if (i < 0 || count < 0) throw DomainError("invalid Betti entry");
  entries_[{i, j}] += count;
}

long BettiTable::at(int i, std::int64_t j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

long BettiTable::total(int i) const {
  long sum = 0;
  for (const auto& [key, count] : entries_) {
    if (key.first == i) sum += count;
  }
  return sum;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, count] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::int64_t BettiTable::regularity() const {
  std::int64_t reg = 0;
  for (const auto& [key, count] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

int BettiTable::depth() const {
  return static_cast<int>(nvars_) - projective_dimension();
}

std::string BettiTable::render() const {
  if (entries_.empty()) return "(zero module)\n";
  const int pd = projective_dimension();
  std::int64_t low = std::numeric_limits<std::int64_t>::max();
  std::int64_t high = std::numeric_limits<std::int64_t>::min();
  for (const auto& [key, count] : entries_) {
    low = std::min(low, key.second - key.first);
    high = std::max(high, key.second - key.first);
  }
  std::ostringstream out;
  out << std::setw(7) << "";
  for (int i = 0; i <= pd; ++i) out << std::setw(6) << i;
  out << "\n" << std::setw(7) << "total:";
  for (int i = 0; i <= pd; ++i) out << std::setw(6) << total(i);
  out << "\n";
  for (std::int64_t row = low; row <= high; ++row) {
    out << std::setw(6) << row << ":";
    for (int i = 0; i <= pd; ++i) {
      const long b = at(i, row + i);
      if (b == 0) {
        out << std::setw(6) << "-";
      } else {
        out << std::setw(6) << b;
      }
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::ordered_json BettiTable::to_json() const {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [key, count] : entries_) {
    entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", count}});
  }
  return {{"entries", entries},
          {"projective_dimension", projective_dimension()},
          {"regularity", regularity()},
          {"depth", depth()}};
}

}  // namespace arithdeg
