#ifndef ARITHDEG_POLY_HPP
#define ARITHDEG_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arithdeg/poly_ring.hpp"

namespace arithdeg {

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Result of a homogeneity test on a polynomial that is homogeneous.
struct FormDegree {
  /// Empty for the zero polynomial, which is a form of every degree.
  std::optional<std::int64_t> degree;
};

/// An exact sparse polynomial of S. Terms are kept strictly descending in the
/// ring's term order with nonzero coefficients, so structural equality is
/// polynomial equality. Values are immutable; every operation returns a new
/// polynomial.
class Poly {
 public:
  explicit Poly(RingPtr ring);

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts that `terms` are already canonical.
  static Poly from_sorted_terms(RingPtr ring, std::vector<Term> terms);
  static Poly constant(RingPtr ring, const Coeff& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, const Monomial& m,
                       const Coeff& c = Coeff(1));

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Precondition: nonzero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }

  /// Largest total degree of a term; -1 for zero.
  std::int64_t total_degree() const noexcept;
  std::optional<FormDegree> homogeneity() const;
  bool is_homogeneous() const { return homogeneity().has_value(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Coeff& c) const;
  Poly times_term(const Monomial& m, const Coeff& c) const;
  Poly pow(unsigned exponent) const;
  /// Divides by the leading coefficient.
  Poly monic() const;

  /// Image under x_index -> replacement. See substitute_linear().
  Poly substitute(std::size_t index, const Poly& replacement) const;

  /// Re-expresses the polynomial in a ring with the same field and variables
  /// but a different term order (or identical variables under a new name
  /// set of the same length).
  Poly in_ring(const RingPtr& target) const;

  std::string render() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  Poly(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// The kinds of the generic ring operation.
enum class PolyOpKind { add, sub, mul };

/// Exact ring operation; throws RingMismatch across rings.
Poly poly_op(PolyOpKind kind, const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Coeff& c);

/// Some(degree) when every term has the same degree (the zero polynomial is
/// reported with an empty degree), nothing otherwise.
std::optional<FormDegree> is_homogeneous(const Poly& f);

/// Image of f under x_index -> replacement. The replacement must be zero or
/// homogeneous of degree 0 or 1; a nonzero constant replacement is rejected
/// when f is a form involving x_index, since the image would not be a form.
Poly substitute_linear(const Poly& f, std::size_t index,
                       const Poly& replacement);

/// Exact quotient f / g; throws DomainError if g does not divide f.
Poly divide_exact(const Poly& f, const Poly& g);

}  // namespace arithdeg

#endif  // ARITHDEG_POLY_HPP
