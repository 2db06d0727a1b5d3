#ifndef ARITHDEG_RESOLUTION_HPP
#define ARITHDEG_RESOLUTION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "arithdeg/betti.hpp"
#include "arithdeg/groebner.hpp"
#include "arithdeg/ideal.hpp"

namespace arithdeg {

/// S(-twist_0) + ... + S(-twist_{r-1}).
struct FreeModule {
  RingPtr ring;
  std::vector<std::int64_t> twists;

  std::size_t rank() const noexcept { return twists.size(); }
  ModuleSpace space(ModuleOrderKind kind = ModuleOrderKind::term_over_position) const;
  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return same_ring(a.ring, b.ring) && a.twists == b.twists;
  }
};

/// A graded map source -> target; matrix[i][j] is the coefficient of the
/// i-th target basis element in the image of the j-th source basis element,
/// of degree twist_src(j) - twist_tgt(i) when nonzero.
class GradedMap {
 public:
  GradedMap(FreeModule source, FreeModule target,
            std::vector<std::vector<Poly>> matrix);
  /// Columns given as module elements of target.space().
  static GradedMap from_columns(FreeModule source, FreeModule target,
                                const std::vector<Vec>& columns);

  const FreeModule& source() const noexcept { return source_; }
  const FreeModule& target() const noexcept { return target_; }
  const Poly& entry(std::size_t i, std::size_t j) const { return matrix_.at(i).at(j); }
  const std::vector<std::vector<Poly>>& matrix() const noexcept { return matrix_; }
  std::vector<Vec> columns(const ModuleSpace& target_space) const;
  bool is_zero() const;

  /// (*this) o inner.
  GradedMap compose(const GradedMap& inner) const;
  /// Dual map Hom(target, S) -> Hom(source, S).
  GradedMap transpose() const;

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<std::vector<Poly>> matrix_;
};

/// Generators of the kernel of e_j -> images[j], as elements of the free
/// module with the given source twists. With `minimal` set, a minimal
/// homogeneous generating set is returned.
std::vector<Vec> kernel(const ModuleSpace& target, const std::vector<std::int64_t>& source_twists,
                        const std::vector<Vec>& images, bool minimal = true);

/// Reduced Groebner basis of a submodule under the position-over-term order.
std::vector<Vec> module_gb(const FreeModule& module, std::vector<Vec> generators);

/// A map whose image is ker(m), built from minimal kernel generators.
GradedMap syzygy(const GradedMap& m);

struct ResolutionOptions {
  /// Pick minimal generators at every step; otherwise only the pruning pass
  /// of minimalize() removes redundancy.
  bool minimal_generators = true;
};

/// d_1, ..., d_L of a graded free resolution of S/I; maps[i] = d_{i+1}.
struct Resolution {
  std::vector<GradedMap> maps;
  BettiTable betti;

  FreeModule module(std::size_t i) const;
  std::size_t length() const noexcept { return maps.size(); }
};

/// Splits off unit entries until every entry of every map lies in m.
void minimalize(std::vector<GradedMap>& maps);
BettiTable betti_from_maps(const RingPtr& ring, const std::vector<GradedMap>& maps);

/// Minimal free resolution of S/I. Throws DomainError for the unit ideal
/// and InternalError if the exactness checks fail.
Resolution free_resolution(const Ideal& ideal, const ResolutionOptions& options = {});
/// d_i o d_{i+1} = 0 and the alternating sum of Hilbert series equals the
/// series of S/I.
bool verify_resolution(const Ideal& ideal, const Resolution& resolution);

/// m(I) = reg(S/I) + 1.
std::int64_t regularity(const Ideal& ideal);
/// depth S/I = nvars - pd(S/I).
int depth(const Ideal& ideal);

/// Annihilator of Ext^c(S/I, S); the unit ideal when the module vanishes.
Ideal ext_annihilator(const Ideal& ideal, const Resolution& resolution, int c);
Ideal ext_annihilator(const Ideal& ideal, int c);

/// I : e for a module element e and a submodule given by generators.
Ideal module_colon(const ModuleSpace& space, const std::vector<Vec>& submodule, const Vec& e);

/// I>=r, the intersection of the primary components of h-dim >= r, via
/// saturation by Ext annihilators. Accepts -1 <= r <= n + 1. The resolution
/// and annihilators are computed once per instance; not thread-safe.
class DimensionFiltration {
 public:
  explicit DimensionFiltration(Ideal ideal);

  const Ideal& ideal() const noexcept { return ideal_; }
  const Resolution& resolution();
  const Ideal& ext_annihilator(int c);
  const Ideal& at(int r);

 private:
  Ideal ideal_;
  std::optional<Resolution> resolution_;
  std::map<int, Ideal> annihilators_;
  std::map<int, Ideal> levels_;
};

Ideal dimension_filtration(const Ideal& ideal, int r);

}  // namespace arithdeg

#endif  // ARITHDEG_RESOLUTION_HPP
