#include "arithdeg/random.hpp"

#include <limits>

#include "arithdeg/error.hpp"

namespace arithdeg {

namespace {

Monomial random_monomial(std::size_t nvars, unsigned degree, Rng& rng) {
  std::vector<Exponent> exps(nvars, 0);
  for (unsigned k = 0; k < degree; ++k) {
    ++exps[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nvars) - 1))];
  }
  return Monomial(std::span<const Exponent>(exps.data(), exps.size()));
}

}  // namespace

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

Poly random_linear_form(const RingPtr& ring, Rng& rng, std::int64_t bound) {
  return random_linear_form_avoiding(ring, {}, rng, bound);
}

Poly random_linear_form_avoiding(const RingPtr& ring, const VariableSet& avoid, Rng& rng,
                                 std::int64_t bound) {
  if (avoid.size() >= ring->nvars()) {
    throw DomainError("every linear form lies in the maximal ideal");
  }
  while (true) {
    std::vector<Term> terms;
    bool outside = false;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      const std::int64_t c = rng.uniform(-bound, bound);
      if (c == 0) continue;
      terms.push_back({Monomial::variable(ring->nvars(), i),
                       ring->field().from_int(static_cast<long>(c))});
      bool in_prime = false;
      for (std::size_t v : avoid) in_prime = in_prime || v == i;
      outside = outside || !in_prime;
    }
    Poly f = Poly::from_terms(ring, std::move(terms));
    if (outside && !f.is_zero()) return f;
  }
}

MonomialIdeal random_monomial_ideal(const MonomialIdealShape& shape, Rng& rng) {
  const auto count = static_cast<std::size_t>(
      rng.uniform(1, static_cast<std::int64_t>(shape.max_generators)));
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < count; ++k) {
    const auto degree = static_cast<unsigned>(
        rng.uniform(1, static_cast<std::int64_t>(shape.max_degree)));
    gens.push_back(random_monomial(shape.nvars, degree, rng));
  }
  return MonomialIdeal(shape.nvars, std::move(gens));
}

Ideal random_homogeneous_ideal(const RingPtr& ring, Rng& rng, std::size_t count,
                               std::size_t terms, unsigned max_degree) {
  std::vector<Poly> gens;
  for (std::size_t k = 0; k < count; ++k) {
    const auto degree = static_cast<unsigned>(rng.uniform(1, max_degree));
    const auto size = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(terms)));
    std::vector<Term> parts;
    for (std::size_t j = 0; j < size; ++j) {
      parts.push_back({random_monomial(ring->nvars(), degree, rng),
                       ring->field().from_int(static_cast<long>(rng.uniform(-3, 3)))});
    }
    Poly f = Poly::from_terms(ring, std::move(parts));
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return Ideal(ring, std::move(gens), "random");
}

}  // namespace arithdeg
