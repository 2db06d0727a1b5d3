#include <doctest.h>

#include <arithdeg/error.hpp>
#include <arithdeg/monomial_ideal.hpp>
#include <arithdeg/resolution.hpp>

#include "support.hpp"

using namespace testing;

TEST_SUITE("resolution") {
  TEST_CASE("Koszul complex of a complete intersection") {
    const auto r = ring(3);
    const Ideal i = ideal(r, {"x0^2", "x1^3"});
    const Resolution res = free_resolution(i);
    CHECK(verify_resolution(i, res));
    CHECK(res.betti.at(0, 0) == 1);
    CHECK(res.betti.at(1, 2) == 1);
    CHECK(res.betti.at(1, 3) == 1);
    CHECK(res.betti.at(2, 5) == 1);
    CHECK(res.betti.projective_dimension() == 2);
    CHECK(regularity(i) == 4);  // reg(S/I) = 3
    CHECK(depth(i) == 1);
  }

  TEST_CASE("linear ideals have m = 1") {
    const auto r = ring(3);
    CHECK(regularity(ideal(r, {"x0", "x1"})) == 1);
  }

  TEST_CASE("twisted cubic") {
    const auto r = ring(4);
    const Ideal i = ideal(r, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
    const Resolution res = free_resolution(i);
    CHECK(verify_resolution(i, res));
    CHECK(res.betti.at(1, 2) == 3);
    CHECK(res.betti.at(2, 3) == 2);
    CHECK(res.betti.projective_dimension() == 2);
    CHECK(res.betti.regularity() == 1);
  }

  TEST_CASE("second worked example") {
    const auto r = ring(3);
    const Ideal i = ideal(r, {"x0^2*x1", "x1^2*x2", "x0*x2^2", "x2^3"});
    const Resolution res = free_resolution(i);
    CHECK(verify_resolution(i, res));
    CHECK(res.betti.projective_dimension() == 3);
    CHECK(res.betti.depth() == 0);
    CHECK(res.betti.regularity() == 3);
    CHECK(res.betti == lcm_betti(to_monomial_ideal(i)));
  }

  TEST_CASE("non-minimal generators are pruned") {
    const auto r = ring(3);
    const Ideal i = ideal(r, {"x0^2", "x0*x1", "x0^2 + x0*x1", "x0^3"});
    const Resolution a = free_resolution(i);
    const Resolution b = free_resolution(i, {.minimal_generators = false});
    CHECK(a.betti == b.betti);
    CHECK(verify_resolution(i, b));
    CHECK(a.betti.at(1, 2) == 2);
  }

  TEST_CASE("unit and zero ideals") {
    const auto r = ring(2);
    CHECK_THROWS_AS(free_resolution(Ideal::unit(r)), DomainError);
    const Resolution z = free_resolution(Ideal::zero(r));
    CHECK(z.maps.empty());
    CHECK(z.betti.at(0, 0) == 1);
  }

  TEST_CASE("filtration of a general ideal through Ext annihilators") {
    const auto r = ring(3);
    // A line with an embedded point after a linear change of coordinates.
    const Ideal i = ideal(r, {"x0^2 + 2*x0*x1 + x1^2", "x0*x1 - x0*x2 + x1^2 - x1*x2"});
    DimensionFiltration f(i);
    CHECK(ideal_equal(f.at(-1), i));
    CHECK(ideal_equal(f.at(0), i));
    CHECK(ideal_equal(f.at(1), ideal(r, {"x0 + x1"})));
    CHECK(f.at(2).is_unit());
  }
}
