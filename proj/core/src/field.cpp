#include "arithdeg/field.hpp"

#include "arithdeg/error.hpp"

namespace arithdeg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw DomainError("GF(p) requires a prime p < 2^31, got " +
                      std::to_string(p));
  }
  return Field(p);
}

Coeff Field::reduce(const mpz_class& value) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), characteristic_);
  return Coeff(r);
}

Coeff Field::from_int(long value) const {
  return from_integer(mpz_class(value));
}

Coeff Field::from_integer(const mpz_class& value) const {
  if (is_rational()) return Coeff(value);
  return reduce(value);
}

Coeff Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw DomainError("zero denominator");
  if (is_rational()) {
    Coeff q(num, den);
    q.canonicalize();
    return q;
  }
  Coeff d = reduce(den);
  if (is_zero(d)) {
    throw DomainError("denominator " + den.get_str() +
                      " is not invertible in " + name());
  }
  return div(reduce(num), d);
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (is_rational()) return a + b;
  return reduce(a.get_num() + b.get_num());
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (is_rational()) return a - b;
  return reduce(a.get_num() - b.get_num());
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (is_rational()) return a * b;
  return reduce(a.get_num() * b.get_num());
}

Coeff Field::div(const Coeff& a, const Coeff& b) const {
  if (is_rational()) {
    if (is_zero(b)) throw DomainError("division by zero");
    return a / b;
  }
  return mul(a, inv(b));
}

Coeff Field::neg(const Coeff& a) const {
  if (is_rational()) return -a;
  return reduce(-a.get_num());
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero");
  if (is_rational()) return 1 / a;
  mpz_class r;
  const mpz_class p(characteristic_);
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Coeff(r);
}

std::string Field::name() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(characteristic_) + ")";
}

}  // namespace arithdeg
