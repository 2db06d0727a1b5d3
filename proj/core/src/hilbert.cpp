#include "arithdeg/hilbert.hpp"

#include <algorithm>
#include <map>

#include "arithdeg/error.hpp"

namespace arithdeg {

namespace {

UPoly one_minus_t_power(std::int64_t d) {
  return UPoly::constant(1) - UPoly::monomial(static_cast<unsigned>(d));
}

bool pairwise_coprime(std::span<const Monomial> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].coprime(gens[j])) return false;
    }
  }
  return true;
}

UPoly numerator(const MonomialIdeal& m) {
  if (m.is_zero()) return UPoly::constant(1);
  if (m.is_unit()) return {};
  const auto gens = m.generators();
  if (pairwise_coprime(gens)) {
    UPoly acc = UPoly::constant(1);
    for (const auto& g : gens) acc = acc * one_minus_t_power(g.degree());
    return acc;
  }
  const std::size_t n = m.nvars();
  std::vector<std::size_t> count(n, 0);
  std::vector<Exponent> low(n, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] == 0) continue;
      ++count[i];
      low[i] = low[i] == 0 ? g[i] : std::min(low[i], g[i]);
    }
  }
  const std::size_t var = static_cast<std::size_t>(
      std::max_element(count.begin(), count.end()) - count.begin());
  const Monomial pivot = Monomial::variable(n, var, low[var]);
  // HN(M) = HN(M + (p)) + t^deg(p) HN(M : p).
  return numerator(m + MonomialIdeal(n, {pivot})) +
         UPoly::monomial(static_cast<unsigned>(pivot.degree())) * numerator(m.colon(pivot));
}

}  // namespace

mpz_class HilbertSeries::value(std::int64_t l) const {
  if (l < 0) return 0;
  mpz_class acc = 0;
  const auto& c = numerator.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const std::int64_t rest = l - static_cast<std::int64_t>(k);
    if (rest < 0) break;
    if (sgn(c[k]) == 0) continue;
    acc += c[k].get_num() *
           binomial(static_cast<long>(rest + static_cast<std::int64_t>(nvars) - 1),
                    nvars - 1);
  }
  return acc;
}

std::vector<mpz_class> HilbertSeries::values(std::int64_t from, std::int64_t to) const {
  std::vector<mpz_class> out;
  for (std::int64_t l = from; l <= to; ++l) out.push_back(value(l));
  return out;
}

HilbertSeries hilbert_numerator(const MonomialIdeal& m) {
  if (m.nvars() == 0) throw DomainError("Hilbert series needs at least one variable");
  return {numerator(m), m.nvars()};
}

HilbertSeries hilbert_series(const Ideal& ideal) {
  return hilbert_numerator(leading_term_ideal(ideal));
}

mpz_class hilbert_function(const Ideal& ideal, std::int64_t l) {
  return hilbert_series(ideal).value(l);
}

HilbertPolyData hilbert_polynomial(const HilbertSeries& series) {
  HilbertPolyData data;
  const std::int64_t nvars = static_cast<std::int64_t>(series.nvars);
  if (series.numerator.is_zero()) {
    data.degree = 0;
    data.postulation = -(nvars + 2);
    return data;
  }
  const int k = series.numerator.multiplicity_at_one();
  const UPoly q = series.numerator.divide_one_minus_x(k);
  const std::int64_t pole = nvars - k;
  if (pole > 0) {
    for (int i = 0; i <= q.degree(); ++i) {
      if (sgn(q.coeff(i)) == 0) continue;
      // The coefficient of t^l in t^i / (1 - t)^pole is C(l - i + pole - 1, pole - 1).
      data.polynomial = data.polynomial +
                        binomial_polynomial(mpq_class(pole - 1 - i),
                                            static_cast<unsigned>(pole - 1))
                            .scaled(q.coeff(i));
    }
    data.hdim = static_cast<int>(pole - 1);
  }
  const mpq_class e = q(1);
  if (e.get_den() != 1) throw InternalError("non-integral degree");
  data.degree = e.get_num();

  const std::int64_t top = std::max<std::int64_t>(q.degree() - pole + 1, 0);
  if (data.polynomial.is_zero()) {
    mpz_class sum = 0;
    for (std::int64_t l = 0; l <= top; ++l) sum += series.value(l);
    if (series.value(top) != 0 || sum != data.degree) {
      throw InternalError("finite-length Hilbert function failed to stabilise");
    }
  }
  std::int64_t l0 = top;
  while (l0 - 1 >= -(nvars + 2) &&
         mpq_class(series.value(l0 - 1)) == data.polynomial(mpq_class(l0 - 1))) {
    --l0;
  }
  data.postulation = l0;
  return data;
}

HilbertPolyData hilbert_polynomial(const Ideal& ideal) {
  return hilbert_polynomial(hilbert_series(ideal));
}

UPoly ideal_hilbert_polynomial(const Ideal& ideal) {
  const std::size_t nvars = ideal.ring()->nvars();
  const UPoly ring_poly = hilbert_polynomial(HilbertSeries{UPoly::constant(1), nvars}).polynomial;
  return ring_poly - hilbert_polynomial(ideal).polynomial;
}

UPoly delta(const UPoly& p, int r) {
  if (r < 0) throw DomainError("difference order must be non-negative");
  UPoly out = p;
  for (int i = 0; i < r; ++i) out = out - out.compose_shift(-1);
  return out;
}

UPoly delta_tau(const UPoly& p, int tau) {
  if (tau < 1) throw DomainError("difference step must be positive");
  return p - p.compose_shift(-tau);
}

mpz_class delta_function(const HilbertSeries& series, int r, std::int64_t l) {
  if (r < 0) throw DomainError("difference order must be non-negative");
  mpz_class acc = 0;
  for (int j = 0; j <= r; ++j) {
    const mpz_class term = binomial(r, static_cast<unsigned long>(j)) * series.value(l - j);
    acc += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return acc;
}

mpz_class delta_tau_function(const HilbertSeries& series, int tau, std::int64_t l) {
  if (tau < 1) throw DomainError("difference step must be positive");
  return series.value(l) - series.value(l - tau);
}

}  // namespace arithdeg
