#ifndef ARITHDEG_TESTS_SUPPORT_HPP
#define ARITHDEG_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <arithdeg/ideal.hpp>
#include <arithdeg/parse.hpp>
#include <arithdeg/poly_ring.hpp>
#include <arithdeg/random.hpp>

namespace testing {

using namespace arithdeg;

inline RingPtr ring(std::size_t nvars, Field field = Field::rationals(),
                    TermOrder order = TermOrder::grevlex()) {
  return PolyRing::standard(nvars, field, order);
}

inline Poly P(const RingPtr& r, const std::string& text) { return parse_poly(text, r); }

inline Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Poly> out;
  for (const char* g : gens) out.push_back(parse_poly(g, r));
  return Ideal(r, std::move(out));
}

/// The shared random corpus: seeded monomial ideals in 4 variables with at
/// most 6 generators of degree at most 4.
inline std::vector<MonomialIdeal> monomial_corpus(std::size_t count = 100,
                                                  std::uint64_t seed = 20240601) {
  Rng rng(seed);
  std::vector<MonomialIdeal> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_monomial_ideal({4, 6, 4}, rng));
  return out;
}

}  // namespace testing

#endif  // ARITHDEG_TESTS_SUPPORT_HPP
