#ifndef ARITHDEG_GROEBNER_HPP
#define ARITHDEG_GROEBNER_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "arithdeg/poly.hpp"

namespace arithdeg {

/// A term c * x^a * e_comp of a free module S^r.
struct VecTerm {
  Monomial mono;
  std::uint32_t comp;
  Coeff coeff;

  friend bool operator==(const VecTerm&, const VecTerm&) = default;
};

/// An element of a free module: terms strictly descending in the module
/// order of the ModuleSpace it was built for.
using Vec = std::vector<VecTerm>;

enum class ModuleOrderKind {
  /// Component index first (lower index is larger), then the term order.
  position_over_term,
  /// Twisted degree first, then the term order, then the component.
  term_over_position,
};

/// The free module S^r = S(-twist_0) + ... + S(-twist_{r-1}) over a ring,
/// together with the monomial order used on it. When `eliminate_first` is
/// positive, terms in components below it dominate every other term, so a
/// Groebner basis restricts to one of the submodule living in the remaining
/// components.
struct ModuleSpace {
  RingPtr ring;
  std::vector<std::int64_t> twists;
  ModuleOrderKind kind = ModuleOrderKind::position_over_term;
  std::size_t eliminate_first = 0;

  /// The ring itself as a rank-one module.
  static ModuleSpace of_ring(RingPtr ring);

  std::size_t rank() const noexcept { return twists.size(); }
  std::int64_t degree(const VecTerm& t) const {
    return t.mono.degree() + twists[t.comp];
  }
  std::strong_ordering compare(const VecTerm& a, const VecTerm& b) const;

  Vec normalize(Vec terms) const;
  Vec add_scaled(const Vec& a, const Vec& b, const Coeff& factor,
                 const Monomial& shift) const;
  Vec scale(const Vec& a, const Coeff& c) const;
  Vec monic(const Vec& a) const;
  /// Some(d) when every term has twisted degree d; nullopt otherwise or for
  /// the zero vector.
  std::optional<std::int64_t> homogeneous_degree(const Vec& a) const;
};

struct GroebnerOptions {
  /// For homogeneous input: record which inputs form a minimal generating
  /// set of the submodule (inputs are processed degree by degree and kept
  /// exactly when they are not generated by what came before).
  bool track_minimal_inputs = false;
};

struct GroebnerResult {
  /// Reduced, monic, sorted descending by leading term.
  std::vector<Vec> basis;
  /// Indices into the input list, ascending. Filled when tracking.
  std::vector<std::size_t> minimal_inputs;
  /// Counters for diagnostics and benchmarks.
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
};

/// Buchberger's algorithm with the normal (sugar) selection strategy and the
/// product and chain criteria in Gebauer-Moeller form. Deterministic.
GroebnerResult groebner_basis(const ModuleSpace& space, std::vector<Vec> inputs,
                              const GroebnerOptions& options = {});

/// Full reduction of `f` modulo `basis` (any list whose leading terms are
/// used as reducers).
Vec reduce(const ModuleSpace& space, Vec f, std::span<const Vec> basis);

/// `f` placed in component `comp`, sorted for `space`.
Vec to_vec(const ModuleSpace& space, const Poly& f, std::uint32_t comp = 0);
/// The component-`comp` part of `v` as a polynomial of `ring`.
Poly to_poly(const RingPtr& ring, const Vec& v, std::uint32_t comp = 0);

}  // namespace arithdeg

#endif  // ARITHDEG_GROEBNER_HPP
