#include <doctest.h>

#include <arithdeg/error.hpp>
#include <arithdeg/theorems.hpp>

#include "support.hpp"

using namespace testing;

TEST_SUITE("theorems") {
  TEST_CASE("hypersurface section: equality, strictness and violated hypotheses") {
    const auto r = ring(4);
    // (x0) n (x0, x1)^2 in P^3: a plane with an embedded line.
    const Ideal i = ideal(r, {"x0^2", "x0*x1"});
    const CheckReport eq = check_hypersurface(i, P(r, "x3"), 2);
    CHECK(eq.verdict == Verdict::equality_holds);
    CHECK(eq.values["main"]["lhs"] == 1);
    // x1 kills the embedded component of dimension 1 = r - 1.
    const CheckReport strict = check_hypersurface(i, P(r, "x1"), 2);
    CHECK(strict.verdict == Verdict::strict_inequality);
    const CheckReport bad = check_hypersurface(i, P(r, "x0"), 2);
    CHECK(bad.verdict == Verdict::hypothesis_violated);
    CHECK_FALSE(bad.witness.is_null());
    CHECK_THROWS_AS(check_hypersurface(i, P(r, "x0 + 1"), 2), DomainError);
  }

  TEST_CASE("hypersurface section of a general ideal with degree two form") {
    const auto r = ring(4);
    const Ideal i = ideal(r, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
    const CheckReport rep = check_hypersurface(i, P(r, "x0^2 + x3^2"), 1);
    CHECK(rep.verdict == Verdict::equality_holds);
    CHECK(rep.values["main"]["arith_deg_section"] == 6);
  }

  TEST_CASE("generic section") {
    const auto r = ring(4);
    const Ideal i = ideal(r, {"x0^2", "x0*x1"});
    const CheckReport rep = check_generic_section(i, 2, {.seed = 3, .trials = 2});
    CHECK(rep.verdict == Verdict::equality_holds);
    CHECK(rep.values["trials"].size() == 2);
    CHECK(check_generic_section(i, 0).verdict == Verdict::hypothesis_violated);
    const CheckReport both = check_generic_section_seeds(i, 1, 1, 2);
    CHECK(both.verdict == Verdict::equality_holds);
  }

  TEST_CASE("regularity bounds") {
    const auto r = ring(3);
    const CheckReport rep = check_regularity_bounds(ideal(r, {"x0^2*x1", "x1^2*x2", "x0*x2^2", "x2^3"}), 2);
    CHECK(rep.verdict == Verdict::holds);
    CHECK(rep.values["m"] == 4);
    CHECK(rep.values["depth"] == 0);
  }

  TEST_CASE("Bezout bound on a complete intersection") {
    const auto r = ring(3);
    const CheckReport rep =
        check_bezout(ideal(r, {"x2"}), {P(r, "x0^2"), P(r, "x1^3")}, 1);
    CHECK(rep.verdict == Verdict::equality_holds);
    CHECK(rep.values["lhs"] == 6);
    CHECK(rep.values["rhs"] == 6);
    CHECK_THROWS_AS(check_bezout(ideal(r, {"x2"}), {P(r, "x0"), P(r, "x1"), P(r, "x2")}, 1),
                    DomainError);
    const CheckReport with_t = check_bezout(ideal(r, {"x2"}), {P(r, "x0^2"), P(r, "x1^3")}, 1, 0);
    CHECK(with_t.verdict == Verdict::equality_holds);
  }

  TEST_CASE("first worked example for several paddings") {
    for (int padding : {0, 1, 2}) {
      const CheckReport rep = reproduce_example1(padding);
      CHECK_MESSAGE(rep.verdict == Verdict::holds, rep.values.dump());
    }
  }

  TEST_CASE("job runner keeps order") {
    std::vector<std::function<CheckReport()>> jobs;
    for (int k = 0; k < 7; ++k) {
      jobs.emplace_back([k] {
        CheckReport rep;
        rep.check = std::to_string(k);
        return rep;
      });
    }
    const auto out = run_jobs(jobs, 3);
    for (int k = 0; k < 7; ++k) CHECK(out[static_cast<std::size_t>(k)].check == std::to_string(k));
    jobs.emplace_back([]() -> CheckReport { throw DomainError("boom"); });
    CHECK_THROWS_AS(run_jobs(jobs, 2), DomainError);
  }

  TEST_CASE("exit codes") {
    CHECK(exit_code(Verdict::holds) == 0);
    CHECK(exit_code(Verdict::strict_inequality) == 0);
    CHECK(exit_code(Verdict::falsified) == 1);
    CHECK(exit_code(Verdict::hypothesis_violated) == 3);
    CHECK(worst(Verdict::hypothesis_violated, Verdict::falsified) == Verdict::falsified);
  }
}
