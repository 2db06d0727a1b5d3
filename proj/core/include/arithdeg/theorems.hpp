#ifndef ARITHDEG_THEOREMS_HPP
#define ARITHDEG_THEOREMS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "arithdeg/ideal.hpp"
#include "arithdeg/random.hpp"
#include "arithdeg/report.hpp"

namespace arithdeg {

/// Hyperplane-section inequality for a form F of degree tau >= 1 that is a
/// non-zero-divisor on S/I>=r:
///   arith-deg_{r-1}((I,F)) - arith-deg_{r-1}((I>=r+1,F)) >= tau arith-deg_r(I),
/// with equality exactly when F is also a non-zero-divisor on S/I>=r-1.
/// Also checks the weaker bound without the correction term, the exact
/// polynomial identity behind it and the stability of (I>=u, F)>=r in u.
CheckReport check_hypersurface(const Ideal& ideal, const Poly& form, int r);

struct GenericSectionOptions {
  std::uint64_t seed = 1;
  int trials = 3;
  std::int64_t coefficient_bound = kDefaultCoefficientBound;
  /// Draws per trial before giving up on finding a non-zero-divisor.
  int max_attempts = 20;
};

/// arith-deg_r(I) == arith-deg_{r-1}((I,h)) for random linear forms h that
/// are non-zero-divisors on S/I>=0; r >= 1.
CheckReport check_generic_section(const Ideal& ideal, int r,
                                  const GenericSectionOptions& options = {});
/// Runs two seeds; on disagreement both reruns use a doubled coefficient
/// bound, and a persisting disagreement is an Error.
CheckReport check_generic_section_seeds(const Ideal& ideal, int r, std::uint64_t seed_a,
                                        std::uint64_t seed_b,
                                        GenericSectionOptions options = {});

/// Regularity bounds: arith-deg_r(I) <= Delta^r P(S/I)(l) for l >= m - 1,
/// the binomial and power chain, the depth-sharpened threshold on the
/// Hilbert function, non-negativity of Delta^r P(I) and H = P from m - t
/// on. m = reg(S/I) + 1, t = depth S/I.
CheckReport check_regularity_bounds(const Ideal& ideal, int r_max, int span = 4);

/// Bezout-type bound for a sequence of forms F_1..F_s, s <= r + 1, each a
/// non-zero-divisor on S/(J_{i-1})>=r-i+1 with J_i = (J_{i-1}, F_i):
///   arith-deg_{r-s}(J_s) >= deg F_1 ... deg F_s arith-deg_r(I).
/// The equality criterion is compared with the outcome. With `t`, the
/// bound for the t-th level is checked as well.
CheckReport check_bezout(const Ideal& ideal, const std::vector<Poly>& forms, int r,
                         std::optional<int> t = std::nullopt);

/// The ideal of the first worked example in K[x0..x3, y1..y_padding]
/// (padding >= 0), with its primary component q.
struct ExampleOne {
  RingPtr ring;
  Ideal q;
  Ideal ideal;
  Poly form;
  int r;
};
ExampleOne example_one(int padding);
/// The ideal of the second worked example, built from its three primary
/// components in K[x0, x1, x2].
Ideal example_two();

CheckReport reproduce_example1(int padding = 1);
CheckReport reproduce_example2();

/// Runs the jobs on `threads` workers; the results keep job order.
/// Exceptions propagate after every job has finished.
std::vector<CheckReport> run_jobs(const std::vector<std::function<CheckReport()>>& jobs,
                                  unsigned threads);

}  // namespace arithdeg

#endif  // ARITHDEG_THEOREMS_HPP
