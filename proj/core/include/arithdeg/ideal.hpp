#ifndef ARITHDEG_IDEAL_HPP
#define ARITHDEG_IDEAL_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "arithdeg/monomial_ideal.hpp"
#include "arithdeg/poly.hpp"

namespace arithdeg {

/// A homogeneous ideal of S given by generators. The reduced Groebner basis
/// under the ring order is computed on first use and shared between copies;
/// the fill is idempotent, so concurrent readers are safe.
class Ideal {
 public:
  /// Zero generators are dropped; every generator must be a form of `ring`.
  Ideal(RingPtr ring, std::vector<Poly> generators, std::string provenance = {});

  static Ideal zero(RingPtr ring);
  static Ideal unit(RingPtr ring);
  /// The irrelevant ideal m = (x0, ..., xn).
  static Ideal maximal(RingPtr ring);
  /// Ideal generated by variables with the given indices.
  static Ideal coordinate(RingPtr ring, std::span<const std::size_t> variables);
  static Ideal from_monomials(RingPtr ring, const MonomialIdeal& m,
                              std::string provenance = {});

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Poly> generators() const noexcept { return generators_; }
  const std::string& provenance() const noexcept { return provenance_; }

  /// Reduced monic Groebner basis, sorted by descending leading monomial.
  const std::vector<Poly>& groebner_basis() const;

  bool is_zero() const;
  bool is_unit() const;
  /// True when the reduced basis consists of monomials.
  bool is_monomial() const;
  bool contains(const Poly& f) const;

  /// The same ideal with its generators replaced by the reduced basis.
  Ideal with_basis_generators() const;

  std::string render() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Poly> generators_;
  std::string provenance_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis of homogeneous `generators`.
Ideal buchberger(std::vector<Poly> generators, const RingPtr& ring);

Poly normal_form(const Poly& f, const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// a is contained in b.
bool ideal_subset(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal add_generators(const Ideal& a, std::span<const Poly> extra);

/// I n J by eliminating t from t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect_all(std::span<const Ideal> ideals);
/// I : F for a nonzero form F.
Ideal colon(const Ideal& ideal, const Poly& f);
/// I : J = intersection of I : g over the generators g of J.
Ideal colon(const Ideal& ideal, const Ideal& by);
/// I : J^infinity, iterating I -> I : J until it stabilises.
Ideal saturate(const Ideal& ideal, const Ideal& by);
/// I n K[x_k, ..., x_n], computed with a block order on the first k
/// variables.
Ideal eliminate(const Ideal& ideal, std::size_t k);

MonomialIdeal leading_term_ideal(const Ideal& ideal);
/// Throws DomainError unless the ideal is monomial.
MonomialIdeal to_monomial_ideal(const Ideal& ideal);

/// True when `f` is a non-zero-divisor on S/I, i.e. I : f = I.
bool is_nonzerodivisor(const Poly& f, const Ideal& ideal);

}  // namespace arithdeg

#endif  // ARITHDEG_IDEAL_HPP
