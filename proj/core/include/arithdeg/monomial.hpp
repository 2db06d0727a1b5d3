#ifndef ARITHDEG_MONOMIAL_HPP
#define ARITHDEG_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace arithdeg {

/// Upper bound on ring variables, including auxiliary variables that the
/// elimination routines append internally.
inline constexpr std::size_t kMaxVariables = 16;

using Exponent = std::uint32_t;

/// A monomial x^a as a fixed-width exponent vector with cached total degree.
/// Exponent overflow is reported with std::overflow_error.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  explicit Monomial(std::span<const Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index,
                           Exponent power = 1);

  std::size_t size() const noexcept { return nvars_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::int64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  std::span<const Exponent> exponents() const noexcept {
    return {exps_.data(), nvars_};
  }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  /// Number of variables with positive exponent.
  std::size_t support_size() const noexcept;

  Monomial with_exponent(std::size_t i, Exponent e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; `b` must divide `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  void recompute_degree();

  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::int64_t degree_ = 0;
};

}  // namespace arithdeg

template <>
struct std::hash<arithdeg::Monomial> {
  std::size_t operator()(const arithdeg::Monomial& m) const noexcept {
    return m.hash();
  }
};

#endif  // ARITHDEG_MONOMIAL_HPP
