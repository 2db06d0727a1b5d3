#ifndef ARITHDEG_UNIVARIATE_HPP
#define ARITHDEG_UNIVARIATE_HPP

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace arithdeg {

/// A dense univariate polynomial with rational coefficients. Hilbert series
/// numerators (integer coefficients, variable t) and Hilbert polynomials
/// (variable l) share this type. Coefficients are trimmed, so the zero
/// polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<mpq_class> coefficients);
  static UPoly constant(const mpq_class& c);
  /// c * x^k.
  static UPoly monomial(unsigned k, const mpq_class& c = 1);
  /// The linear polynomial x + a.
  static UPoly shifted_variable(const mpq_class& a);

  /// -1 for zero.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
  mpq_class coeff(int k) const;
  mpq_class leading_coeff() const;
  bool has_integer_coefficients() const;

  mpq_class operator()(const mpq_class& x) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const mpq_class& c) const;

  /// p(x + a).
  UPoly compose_shift(const mpq_class& a) const;
  /// Number of factors (1 - x) dividing a nonzero polynomial.
  int multiplicity_at_one() const;
  /// Exact quotient by (1 - x)^k; throws DomainError if inexact.
  UPoly divide_one_minus_x(int k) const;

  std::string render(std::string_view variable) const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// C(x + a, m) as a polynomial in x.
UPoly binomial_polynomial(const mpq_class& a, unsigned m);
/// C(top, m) for integers, zero when top < m or top < 0.
mpz_class binomial(long top, unsigned long m);

}  // namespace arithdeg

#endif  // ARITHDEG_UNIVARIATE_HPP
