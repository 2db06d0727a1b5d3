#include <doctest.h>

#include <arithdeg/error.hpp>
#include <arithdeg/hilbert.hpp>
#include <arithdeg/univariate.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("hilbert") {
  TEST_CASE("univariate helpers") {
    const UPoly p = binomial_polynomial(2, 2);  // C(x+2, 2)
    CHECK(p(0) == 1);
    CHECK(p(3) == 10);
    CHECK(p.compose_shift(1)(0) == 3);
    const UPoly one_minus = UPoly({1, -1});
    CHECK((one_minus * one_minus * p).divide_one_minus_x(2) == p);
    CHECK_THROWS_AS(p.divide_one_minus_x(1), DomainError);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(-1, 2) == 0);
  }

  TEST_CASE("series of simple quotients") {
    const auto r = ring(3);
    // S/(x0) is K[x1, x2]: H(l) = l + 1.
    const HilbertPolyData d = hilbert_polynomial(ideal(r, {"x0"}));
    CHECK(d.hdim == 1);
    CHECK(d.degree == 1);
    CHECK(d.polynomial(10) == 11);
    // A plane cubic: P = 3l, so degree 3 and h-dim 1.
    const HilbertPolyData c = hilbert_polynomial(ideal(r, {"x0^3 + x1^3 + x2^3"}));
    CHECK(c.degree == 3);
    CHECK(c.polynomial(5) == 15);
    // Finite length: S/m^2 has H = 1, 3 and P = 0.
    const HilbertPolyData z = hilbert_polynomial(ideal(r, {"x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"}));
    CHECK(z.hdim == -1);
    CHECK(z.degree == 4);
    CHECK(z.polynomial.is_zero());
  }

  TEST_CASE("series agrees with brute-force monomial counts on the corpus") {
    for (const auto& m : monomial_corpus()) {
      const HilbertSeries s = hilbert_numerator(m);
      for (std::int64_t l = 0; l <= 10; ++l) {
        CHECK(s.value(l) == oracle::standard_monomials(m.generators(), m.nvars(), l));
      }
    }
  }

  TEST_CASE("series agrees with the Macaulay-matrix corank on general ideals") {
    const auto r = ring(3);
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const Ideal i = random_homogeneous_ideal(r, rng, 2 + trial % 2, 3, 3);
      const HilbertSeries s = hilbert_series(i);
      const std::vector<Poly> gens(i.generators().begin(), i.generators().end());
      for (std::int64_t l = 0; l <= 6; ++l) CHECK(s.value(l) == oracle::macaulay_hilbert(gens, l));
    }
  }

  TEST_CASE("postulation and the difference operators") {
    const auto r = ring(3);
    const Ideal i = ideal(r, {"x0^2*x1", "x1^2*x2", "x0*x2^2", "x2^3"});
    const HilbertSeries s = hilbert_series(i);
    const HilbertPolyData d = hilbert_polynomial(s);
    for (std::int64_t l = d.postulation; l <= d.postulation + 5; ++l) {
      CHECK(mpq_class(s.value(l)) == d.polynomial(l));
    }
    CHECK(mpq_class(s.value(d.postulation - 1)) != d.polynomial(d.postulation - 1));
    const UPoly p = binomial_polynomial(2, 2);
    CHECK(delta(p, 1) == binomial_polynomial(1, 1));
    CHECK(delta(p, 2) == UPoly::constant(1));
    CHECK(delta_tau(p, 2)(0) == p(0) - p(-2));
    CHECK(delta_function(s, 1, 3) == s.value(3) - s.value(2));
  }

  TEST_CASE("ideal polynomial is P(S) minus P(S/I)") {
    const auto r = ring(3);
    const Ideal i = ideal(r, {"x0*x1"});
    const UPoly pi = ideal_hilbert_polynomial(i);
    // I = x0*x1 S is S(-2): P(l) = C(l, 2).
    CHECK(pi == binomial_polynomial(0, 2));
  }
}
