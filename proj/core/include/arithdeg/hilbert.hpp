#ifndef ARITHDEG_HILBERT_HPP
#define ARITHDEG_HILBERT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "arithdeg/ideal.hpp"
#include "arithdeg/monomial_ideal.hpp"
#include "arithdeg/univariate.hpp"

namespace arithdeg {

/// The Hilbert series N(t) / (1 - t)^nvars of S/I.
struct HilbertSeries {
  UPoly numerator;
  std::size_t nvars = 0;

  /// H(S/I, l); zero for l < 0.
  mpz_class value(std::int64_t l) const;
  std::vector<mpz_class> values(std::int64_t from, std::int64_t to) const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

struct HilbertPolyData {
  /// P(l), a polynomial in l.
  UPoly polynomial;
  /// h-dim; -1 when P = 0.
  int hdim = -1;
  /// deg; the total length when P = 0.
  mpz_class degree;
  /// Least l with H(l') = P(l') for all l' >= l, scanned no lower than
  /// -(nvars + 2).
  std::int64_t postulation = 0;
};

/// Numerator of the Hilbert series of S/M by pivot recursion.
HilbertSeries hilbert_numerator(const MonomialIdeal& m);
/// Series of S/I through the leading term ideal.
HilbertSeries hilbert_series(const Ideal& ideal);
mpz_class hilbert_function(const Ideal& ideal, std::int64_t l);

HilbertPolyData hilbert_polynomial(const HilbertSeries& series);
HilbertPolyData hilbert_polynomial(const Ideal& ideal);

/// Hilbert polynomial of I itself: P(S, l) - P(S/I, l).
UPoly ideal_hilbert_polynomial(const Ideal& ideal);

/// Delta^r p(l) = iterated p(l) - p(l - 1). Throws DomainError for r < 0.
UPoly delta(const UPoly& p, int r);
/// p(l) - p(l - tau). Throws DomainError for tau < 1.
UPoly delta_tau(const UPoly& p, int tau);
/// Delta^r H(S/I, l) as the coefficient of t^l in (1 - t)^r times the series.
mpz_class delta_function(const HilbertSeries& series, int r, std::int64_t l);
mpz_class delta_tau_function(const HilbertSeries& series, int tau, std::int64_t l);

}  // namespace arithdeg

#endif  // ARITHDEG_HILBERT_HPP
