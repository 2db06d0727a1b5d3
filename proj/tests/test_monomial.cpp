#include <doctest.h>

#include <set>

#include <arithdeg/error.hpp>
#include <arithdeg/monomial_ideal.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

MonomialIdeal mono(std::size_t n, std::initializer_list<std::initializer_list<Exponent>> gens) {
  std::vector<Monomial> out;
  for (auto g : gens) out.emplace_back(g);
  return MonomialIdeal(n, out);
}

}  // namespace

TEST_SUITE("monomial") {
  TEST_CASE("minimal generators") {
    const MonomialIdeal m = mono(2, {{2, 0}, {3, 1}, {0, 2}, {2, 0}});
    CHECK(m.generators().size() == 2);
    CHECK(m.contains(Monomial{5, 5}));
    CHECK_FALSE(m.contains(Monomial{1, 1}));
  }

  TEST_CASE("primary decomposition of the second worked example") {
    const MonomialIdeal m = mono(3, {{2, 1, 0}, {0, 2, 1}, {1, 0, 2}, {0, 0, 3}});
    const Decomposition d = primary_decomposition(m);
    REQUIRE(d.components.size() == 3);
    std::vector<MonomialIdeal> parts;
    for (const auto& c : d.components) parts.push_back(c.ideal);
    CHECK(intersect_all(parts, 3) == m);
    CHECK(length_multiplicity(m, {0, 2}) == 2);
    CHECK(length_multiplicity(m, {1, 2}) == 2);
    CHECK(length_multiplicity(m, {0, 1, 2}) == 4);
    CHECK(length_multiplicity(m, {0, 1}) == 0);
  }

  TEST_CASE("decompositions intersect back and their primes match the brute-force oracle") {
    for (const auto& m : monomial_corpus()) {
      const Decomposition d = primary_decomposition(m);
      std::vector<MonomialIdeal> parts;
      std::set<VariableSet> primes;
      for (const auto& c : d.components) {
        parts.push_back(c.ideal);
        primes.insert(c.prime);
        CHECK(c.hdim == coordinate_prime_hdim(m.nvars(), c.prime));
        CHECK(length_multiplicity(m, c.prime) >= 1);
      }
      CHECK(intersect_all(parts, m.nvars()) == m);
      CHECK(primes == oracle::associated_primes(m));
      const auto ass = associated_primes(m);
      CHECK(std::set<VariableSet>(ass.begin(), ass.end()) == primes);
    }
  }

  TEST_CASE("irreducible components are generated by pure powers") {
    for (const auto& m : monomial_corpus(30)) {
      const auto comps = irreducible_decomposition(m);
      for (const auto& c : comps) {
        for (const auto& g : c.generators()) CHECK(g.support_size() == 1);
      }
      CHECK(intersect_all(comps, m.nvars()) == m);
    }
  }

  TEST_CASE("dimension filtration of a monomial ideal") {
    // (x0^2, x0*x1) = (x0) n (x0^2, x1): a line with an embedded point.
    const MonomialIdeal m = mono(3, {{2, 0, 0}, {1, 1, 0}});
    CHECK(dimension_filtration_monomial(m, -1) == m);
    CHECK(dimension_filtration_monomial(m, 0) == m);
    CHECK(dimension_filtration_monomial(m, 1) == mono(3, {{1, 0, 0}}));
    CHECK(dimension_filtration_monomial(m, 2).is_unit());
  }

  TEST_CASE("colon and saturation by variables") {
    const MonomialIdeal m = mono(3, {{2, 0, 0}, {1, 1, 0}});
    CHECK(m.colon(Monomial{1, 0, 0}) == mono(3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(m.saturate({0, 1, 2}) == m);
    CHECK(m.saturate({0, 1}) == mono(3, {{1, 0, 0}}));
    CHECK(mono(3, {{1, 1, 0}, {1, 0, 1}, {2, 0, 0}}).saturate({0, 1, 2}) == mono(3, {{1, 0, 0}}));
  }
}
