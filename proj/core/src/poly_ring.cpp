#include "arithdeg/poly_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "arithdeg/error.hpp"

namespace arithdeg {

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

PolyRing::PolyRing(Field field, std::vector<std::string> variables,
                   TermOrder order)
    : field_(field), names_(std::move(variables)), order_(order) {
  if (names_.empty()) throw DomainError("a ring needs at least one variable");
  if (names_.size() > kMaxVariables) {
    throw DomainError("at most " + std::to_string(kMaxVariables) +
                      " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!valid_identifier(name)) {
      throw DomainError("invalid variable name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw DomainError("duplicate variable name '" + name + "'");
    }
  }
}

RingPtr PolyRing::make(Field field, std::vector<std::string> variables,
                       TermOrder order) {
  return std::make_shared<const PolyRing>(field, std::move(variables), order);
}

RingPtr PolyRing::standard(std::size_t count, Field field, TermOrder order) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
  return make(field, std::move(names), order);
}

std::optional<std::size_t> PolyRing::variable_index(
    std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr PolyRing::with_order(TermOrder order) const {
  return make(field_, names_, order);
}

RingPtr PolyRing::with_leading_variables(std::size_t count,
                                         std::string_view stem,
                                         TermOrder order) const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    std::string candidate = std::string(stem) + std::to_string(i);
    while (variable_index(candidate)) candidate += "_";
    names.push_back(candidate);
  }
  names.insert(names.end(), names_.begin(), names_.end());
  return make(field_, std::move(names), order);
}

std::string PolyRing::describe() const {
  std::string out = field_.name() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ",";
    out += names_[i];
  }
  return out + "] " + order_.name();
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace arithdeg
