#include "arithdeg/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "arithdeg/error.hpp"

namespace arithdeg {

namespace {

std::uint8_t checked_width(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw DomainError("at most " + std::to_string(kMaxVariables) +
                      " variables are supported");
  }
  return static_cast<std::uint8_t>(nvars);
}

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return a + b;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(checked_width(nvars)) {}

Monomial::Monomial(std::span<const Exponent> exponents)
    : nvars_(checked_width(exponents.size())) {
  std::copy(exponents.begin(), exponents.end(), exps_.begin());
  recompute_degree();
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::span<const Exponent>(exponents.begin(), exponents.size())) {
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

void Monomial::recompute_degree() {
  degree_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) degree_ += exps_[i];
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::support_size() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < nvars_; ++i) count += exps_[i] != 0;
  return count;
}

Monomial Monomial::with_exponent(std::size_t i, Exponent e) const {
  Monomial m = *this;
  m.degree_ += static_cast<std::int64_t>(e) - m.exps_.at(i);
  m.exps_[i] = e;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    m.exps_[i] = checked_add(a.exps_[i], b.exps_[i]);
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (b.exps_[i] > a.exps_[i]) {
      throw DomainError("monomial quotient is not exact");
    }
    m.exps_[i] = a.exps_[i] - b.exps_[i];
  }
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  }
  m.recompute_degree();
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  }
  m.recompute_degree();
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace arithdeg
