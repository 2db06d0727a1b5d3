#ifndef ARITHDEG_MONOMIAL_IDEAL_HPP
#define ARITHDEG_MONOMIAL_IDEAL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "arithdeg/betti.hpp"
#include "arithdeg/field.hpp"
#include "arithdeg/monomial.hpp"
#include "arithdeg/poly_ring.hpp"

namespace arithdeg {

/// Sorted variable indices; stands for the coordinate prime they generate.
using VariableSet = std::vector<std::size_t>;

/// h-dim of S/p for a coordinate prime p in a ring with `nvars` variables.
int coordinate_prime_hdim(std::size_t nvars, const VariableSet& prime);

/// A monomial ideal held by its minimal generators, sorted descending in
/// lex order. The unit ideal is generated by the monomial 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  static MonomialIdeal unit(std::size_t nvars);
  static MonomialIdeal coordinate(std::size_t nvars, const VariableSet& vars);

  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;
  /// Largest generator degree; 0 for the zero ideal.
  std::int64_t max_degree() const;
  /// Variables that appear in some generator.
  VariableSet support() const;

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal colon(const Monomial& m) const;
  MonomialIdeal colon_variables(const VariableSet& vars) const;
  /// M : (vars)^infinity.
  MonomialIdeal saturate(const VariableSet& vars) const;
  /// Sets every variable outside `keep` to 1.
  MonomialIdeal localize(const VariableSet& keep) const;

  std::string render(const PolyRing& ring) const;

  friend MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals,
                            std::size_t nvars);

struct PrimaryComponent {
  MonomialIdeal ideal;
  VariableSet prime;
  int hdim;
  /// deg S/p; always 1 for coordinate primes.
  int degree = 1;
};

struct Decomposition {
  MonomialIdeal source;
  std::vector<PrimaryComponent> components;
};

/// Irredundant irreducible components, obtained by splitting generators
/// u*v with coprime u, v. Throws DomainError for the unit ideal.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& m);
/// Irreducible components grouped by radical. Components are ordered by
/// descending h-dim, then by prime.
Decomposition primary_decomposition(const MonomialIdeal& m);
std::vector<VariableSet> associated_primes(const MonomialIdeal& m);
/// Intersection of the primary components of h-dim >= r.
MonomialIdeal dimension_filtration_monomial(const MonomialIdeal& m, int r);
/// Length of H^0_p of the localisation at the coordinate prime p, counted
/// as standard monomials of (M' : p^inf) modulo M' where M' sets the
/// variables outside p to 1. Zero exactly when p is not associated.
long length_multiplicity(const MonomialIdeal& m, const VariableSet& prime);
/// Graded Betti numbers of S/M from the upper Koszul simplicial complexes at
/// the multidegrees of the lcm lattice.
BettiTable lcm_betti(const MonomialIdeal& m, const Field& field = Field::rationals());

std::string render_variables(const PolyRing& ring, const VariableSet& vars);

}  // namespace arithdeg

#endif  // ARITHDEG_MONOMIAL_IDEAL_HPP
