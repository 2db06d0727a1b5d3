#include <doctest.h>

#include <arithdeg/arith_degree.hpp>
#include <arithdeg/theorems.hpp>

#include "support.hpp"

using namespace testing;

namespace {

// x_i -> x_i + sum_{j > i} c_ij x_j applied in turn: a graded automorphism.
Poly change_coordinates(const Poly& f, const std::vector<std::vector<long>>& c) {
  const auto& r = f.ring();
  Poly out = f;
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    Poly image = Poly::variable(r, i);
    for (std::size_t j = i + 1; j < r->nvars(); ++j) {
      image = image + Poly::variable(r, j).scaled(Coeff(c[i][j]));
    }
    out = out.substitute(i, image);
  }
  return out;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("profiles are invariant under a change of coordinates") {
    const auto r = ring(4);
    Rng rng(99);
    for (const auto& m : monomial_corpus(15, 314)) {
      std::vector<std::vector<long>> c(4, std::vector<long>(4, 0));
      for (auto& row : c) {
        for (auto& v : row) v = static_cast<long>(rng.uniform(-2, 2));
      }
      const Ideal mono = Ideal::from_monomials(r, m);
      std::vector<Poly> moved;
      for (const auto& g : mono.generators()) moved.push_back(change_coordinates(g, c));
      const Ideal general(r, moved);
      const ArithProfile expected = arith_profile(mono);
      const ArithProfile actual = arith_profile(general);
      for (int k = -1; k <= 3; ++k) CHECK(actual.at(k) == expected.at(k));
    }
  }

  TEST_CASE("hypersurface checks never contradict themselves") {
    const auto r = ring(4);
    Rng rng(123);
    int decided = 0;
    for (const auto& m : monomial_corpus(40, 271)) {
      const Ideal i = Ideal::from_monomials(r, m);
      const Poly f = rng.uniform(0, 1) ? random_linear_form(r, rng, 5)
                                       : Poly::variable(r, static_cast<std::size_t>(rng.uniform(0, 3)));
      const int level = static_cast<int>(rng.uniform(0, 3));
      const CheckReport rep = check_hypersurface(i, f, level);
      CHECK_MESSAGE(rep.verdict != Verdict::falsified, rep.values.dump());
      if (rep.verdict != Verdict::hypothesis_violated) ++decided;
    }
    CHECK(decided >= 20);
  }

  TEST_CASE("Bezout checks with linear forms on general ideals") {
    const auto r = ring(4);
    Rng rng(5150);
    for (int k = 0; k < 6; ++k) {
      const Ideal i = random_homogeneous_ideal(r, rng, 2, 2, 2);
      const std::vector<Poly> forms{random_linear_form(r, rng, 4), random_linear_form(r, rng, 4)};
      const CheckReport rep = check_bezout(i, forms, 2, 0);
      CHECK_MESSAGE(rep.verdict != Verdict::falsified, rep.values.dump());
    }
  }
}
