#include <doctest.h>

#include <arithdeg/arith_degree.hpp>
#include <arithdeg/error.hpp>

#include "support.hpp"

using namespace testing;

TEST_SUITE("arithdeg") {
  TEST_CASE("profile of the second worked example") {
    const auto r = ring(3);
    const Ideal i = ideal(r, {"x0^2*x1", "x1^2*x2", "x0*x2^2", "x2^3"});
    const ArithProfile p = arith_profile(i);
    CHECK(p.at(-1) == 4);
    CHECK(p.at(0) == 4);
    CHECK(p.at(1) == 0);
    CHECK(p.at(2) == 0);
  }

  TEST_CASE("degree of a primary ideal sits at its dimension") {
    const auto r = ring(4);
    const Ideal i = ideal(r, {"x0^2", "x1^3"});  // primary, h-dim 1, length 6
    const ArithProfile p = arith_profile(i);
    CHECK(p.at(1) == 6);
    CHECK(p.at(0) == 0);
    CHECK(p.at(-1) == 0);
    CHECK(p.at(2) == 0);
  }

  TEST_CASE("routes agree on general ideals") {
    const auto r = ring(3);
    // (l)^2 + (l m) in new coordinates: a double line and an embedded point.
    const Ideal i = ideal(r, {"x0^2 + 2*x0*x1 + x1^2", "x0*x1 - x0*x2 + x1^2 - x1*x2"});
    ArithDegree engine(i);
    CHECK(engine.at(1) == 1);
    CHECK(engine.at(0) == 1);
    CHECK(engine.at(-1) == 0);
    const auto m = ring(3);
    ArithDegree mono(ideal(m, {"x0^2", "x0*x1"}));
    CHECK(mono.at(0) == 1);
    CHECK(mono.direct(0) == 1);
  }

  TEST_CASE("ext route and monomial route give the same profile") {
    const auto r = ring(4);
    for (const auto& m : monomial_corpus(15, 7)) {
      const Ideal i = Ideal::from_monomials(r, m);
      ArithDegree a(i, FiltrationRoute::ext);
      ArithDegree b(i, FiltrationRoute::monomial);
      for (int k = -1; k <= 3; ++k) CHECK(a.at(k) == b.at(k));
    }
  }

  TEST_CASE("certificate verification") {
    const auto r = ring(3);
    DecompositionCertificate good{
        "line-with-point",
        {P(r, "x0^2"), P(r, "x0*x1")},
        {{{P(r, "x0")}, {0}}, {{P(r, "x0^2"), P(r, "x1")}, {0, 1}}},
        {}};
    const VerifiedDecomposition v = verify_certificate(r, good);
    CHECK(v.status == CertificateStatus::verified);
    const ArithProfile p = certificate_profile(r, good, v);
    CHECK(p.at(1) == 1);
    CHECK(p.at(0) == 1);

    DecompositionCertificate wrong_meet = good;
    wrong_meet.components.pop_back();
    CHECK_THROWS_AS(verify_certificate(r, wrong_meet), DomainError);

    DecompositionCertificate wrong_prime = good;
    wrong_prime.components[1].prime = {0};
    CHECK_THROWS_AS(verify_certificate(r, wrong_prime), DomainError);

    // (x0^2, x0*x1) claimed primary to (x0) is not primary.
    DecompositionCertificate embedded{"embedded",
                                      {P(r, "x0^2"), P(r, "x0*x1")},
                                      {{{P(r, "x0^2"), P(r, "x0*x1")}, {0}}},
                                      {}};
    const VerifiedDecomposition e = verify_certificate(r, embedded);
    CHECK(e.status == CertificateStatus::radical_verified_only);
    CHECK_FALSE(e.warnings.empty());
    CHECK_THROWS_AS(certificate_profile(r, embedded, e), DomainError);
  }

  TEST_CASE("a prime certificate verifies trivially") {
    const auto r = ring(3);
    DecompositionCertificate prime{"prime", {P(r, "x0"), P(r, "x1")},
                                   {{{P(r, "x0"), P(r, "x1")}, {0, 1}}}, {}};
    CHECK(verify_certificate(r, prime).status == CertificateStatus::verified);
  }

  TEST_CASE("unit ideal has a zero profile") {
    const auto r = ring(2);
    const ArithProfile p = arith_profile(Ideal::unit(r));
    for (const auto& e : p.entries) CHECK(e.value == 0);
  }
}
