#ifndef ARITHDEG_RANDOM_HPP
#define ARITHDEG_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "arithdeg/ideal.hpp"
#include "arithdeg/monomial_ideal.hpp"

namespace arithdeg {

/// Seeded generator whose draws are identical on every platform: the raw
/// engine is fully specified and bounded draws use rejection sampling
/// instead of the implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::int64_t kDefaultCoefficientBound = 100;

/// sum c_i x_i with c_i uniform in [-bound, bound], not all zero.
Poly random_linear_form(const RingPtr& ring, Rng& rng,
                        std::int64_t bound = kDefaultCoefficientBound);
/// A random linear form outside the coordinate prime `avoid`.
Poly random_linear_form_avoiding(const RingPtr& ring, const VariableSet& avoid, Rng& rng,
                                 std::int64_t bound = kDefaultCoefficientBound);

struct MonomialIdealShape {
  std::size_t nvars = 4;
  std::size_t max_generators = 6;
  unsigned max_degree = 4;
};

/// A proper nonzero monomial ideal with 1..max_generators generators of
/// degree 1..max_degree.
MonomialIdeal random_monomial_ideal(const MonomialIdealShape& shape, Rng& rng);

/// A homogeneous ideal with `count` generators, each a sum of up to `terms`
/// random monomials of one random degree in [1, max_degree] with small
/// coefficients.
Ideal random_homogeneous_ideal(const RingPtr& ring, Rng& rng, std::size_t count,
                               std::size_t terms, unsigned max_degree);

}  // namespace arithdeg

#endif  // ARITHDEG_RANDOM_HPP
