#ifndef ARITHDEG_FIELD_HPP
#define ARITHDEG_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace arithdeg {

/// Field elements. Over Q this is a canonical rational; over GF(p) it is an
/// integer representative in [0, p).
using Coeff = mpq_class;

/// The coefficient field K: either Q or a prime field GF(p) with p < 2^31.
/// All arithmetic on Coeff values goes through the field so that prime-field
/// values stay reduced.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rationals() { return Field(0); }
  /// Throws DomainError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return characteristic_ == 0; }
  std::uint32_t characteristic() const noexcept { return characteristic_; }

  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return Coeff(1); }
  Coeff from_int(long value) const;
  Coeff from_integer(const mpz_class& value) const;
  /// num/den; den must be invertible in the field.
  Coeff from_fraction(const mpz_class& num, const mpz_class& den) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;

  static bool is_zero(const Coeff& a) { return sgn(a) == 0; }
  static bool is_one(const Coeff& a) { return a == 1; }

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t characteristic)
      : characteristic_(characteristic) {}
  Coeff reduce(const mpz_class& value) const;

  std::uint32_t characteristic_;
};

}  // namespace arithdeg

#endif  // ARITHDEG_FIELD_HPP
