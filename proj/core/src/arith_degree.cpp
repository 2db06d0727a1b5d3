#include "arithdeg/arith_degree.hpp"

#include <algorithm>

#include "arithdeg/error.hpp"
#include "arithdeg/random.hpp"

namespace arithdeg {

namespace {

std::int64_t to_int64(const mpq_class& q, const char* what) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
    throw InternalError(std::string(what) + " is not a machine integer");
  }
  return q.get_num().get_si();
}

bool in_coordinate_prime(const Poly& f, const VariableSet& prime) {
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) {
    return std::any_of(prime.begin(), prime.end(),
                       [&](std::size_t v) { return t.mono[v] > 0; });
  });
}

}  // namespace

std::string route_name(ArithRoute route) {
  switch (route) {
    case ArithRoute::lemma25:
      return "lemma25";
    case ArithRoute::direct:
      return "direct";
    case ArithRoute::minus1:
      return "minus1";
    case ArithRoute::certificate:
      return "certificate";
  }
  return "unknown";
}

std::int64_t ArithProfile::at(int r) const {
  for (const auto& e : entries) {
    if (e.r == r) return e.value;
  }
  return 0;
}

ArithDegree::ArithDegree(Ideal ideal, FiltrationRoute route)
    : ideal_(std::move(ideal)), route_(route) {
  const bool monomial = ideal_.is_monomial();
  if (route_ == FiltrationRoute::monomial && !monomial) {
    throw DomainError("the monomial filtration route needs a monomial ideal");
  }
  if (monomial) monomial_ = to_monomial_ideal(ideal_);
  if (route_ == FiltrationRoute::automatic) {
    route_ = monomial ? FiltrationRoute::monomial : FiltrationRoute::ext;
  }
  if (route_ == FiltrationRoute::ext) ext_ = std::make_unique<DimensionFiltration>(ideal_);
}

ArithDegree::ArithDegree(Ideal ideal, std::map<int, Ideal> levels)
    : ideal_(std::move(ideal)), route_(FiltrationRoute::ext), levels_(std::move(levels)),
      supplied_(true) {
  if (ideal_.is_monomial()) monomial_ = to_monomial_ideal(ideal_);
}

const Ideal& ArithDegree::filtration(int r) {
  const int n = ideal_.ring()->n();
  if (r < -1 || r > n + 1) throw DomainError("filtration index out of range");
  if (auto it = levels_.find(r); it != levels_.end()) return it->second;
  if (supplied_) throw DomainError("supplied filtration lacks a level");
  Ideal level = route_ == FiltrationRoute::ext
                    ? ext_->at(r)
                    : Ideal::from_monomials(ideal_.ring(),
                                            dimension_filtration_monomial(*monomial_, r));
  return levels_.emplace(r, std::move(level)).first->second;
}

const HilbertSeries& ArithDegree::series(int r) {
  if (auto it = series_.find(r); it != series_.end()) return it->second;
  return series_.emplace(r, hilbert_series(filtration(r))).first->second;
}

const HilbertPolyData& ArithDegree::polynomial(int r) {
  if (auto it = polys_.find(r); it != polys_.end()) return it->second;
  return polys_.emplace(r, hilbert_polynomial(series(r))).first->second;
}

std::int64_t ArithDegree::lemma25(int r) {
  if (r < 0) throw DomainError("the Hilbert-polynomial route needs r >= 0");
  if (r > ideal_.ring()->n() || ideal_.is_unit()) return 0;
  const UPoly diff = polynomial(-1).polynomial - polynomial(r + 1).polynomial;
  const UPoly value = delta(diff, r);
  if (value.degree() > 0) throw InternalError("iterated difference is not constant");
  return to_int64(value.coeff(0), "arithmetic degree");
}

std::int64_t ArithDegree::minus1() {
  if (ideal_.is_unit()) return 0;
  const UPoly diff = series(-1).numerator - series(0).numerator;
  UPoly q;
  try {
    q = diff.divide_one_minus_x(static_cast<int>(ideal_.ring()->nvars()));
  } catch (const DomainError&) {
    throw InternalError("the saturation gap does not have finite length");
  }
  return to_int64(q(1), "length of the saturation gap");
}

std::optional<std::int64_t> ArithDegree::direct(int r) {
  if (!monomial_) return std::nullopt;
  return arith_deg_direct(*monomial_, r);
}

std::int64_t ArithDegree::at(int r) {
  if (r < -1) throw DomainError("arithmetic degree needs r >= -1");
  return r == -1 ? minus1() : lemma25(r);
}

ArithProfile ArithDegree::profile() {
  ArithProfile profile;
  const int n = ideal_.ring()->n();
  for (int r = -1; r <= n; ++r) {
    ArithEntry entry;
    entry.r = r;
    entry.value = at(r);
    if (supplied_) {
      entry.routes.push_back(ArithRoute::certificate);
    } else {
      entry.routes.push_back(r == -1 ? ArithRoute::minus1 : ArithRoute::lemma25);
    }
    if (const auto d = direct(r)) {
      if (*d != entry.value) {
        throw InternalError("arithmetic degree routes disagree at r = " + std::to_string(r));
      }
      entry.routes.push_back(ArithRoute::direct);
    }
    profile.entries.push_back(std::move(entry));
  }
  return profile;
}

std::int64_t arith_deg_lemma25(const Ideal& ideal, int r) {
  return ArithDegree(ideal).lemma25(r);
}

std::int64_t arith_deg_direct(const MonomialIdeal& m, int r) {
  if (m.is_unit()) return 0;
  std::int64_t sum = 0;
  for (const auto& c : primary_decomposition(m).components) {
    if (c.hdim == r) sum += length_multiplicity(m, c.prime) * c.degree;
  }
  return sum;
}

std::int64_t arith_deg_minus1(const Ideal& ideal) { return ArithDegree(ideal).minus1(); }

std::int64_t arith_deg(const Ideal& ideal, int r) {
  if (r > ideal.ring()->n()) return 0;
  return ArithDegree(ideal).at(r);
}

ArithProfile arith_profile(const Ideal& ideal) { return ArithDegree(ideal).profile(); }

std::string status_name(CertificateStatus status) {
  return status == CertificateStatus::verified ? "verified" : "radical-verified-only";
}

VerifiedDecomposition verify_certificate(const RingPtr& ring, const DecompositionCertificate& cert,
                                         const CertificateOptions& options) {
  if (cert.components.empty()) throw DomainError("certificate has no components");
  const Ideal source(ring, cert.source);
  std::vector<Ideal> parts;
  for (const auto& c : cert.components) {
    for (std::size_t v : c.prime) {
      if (v >= ring->nvars()) throw DomainError("claimed prime uses an unknown variable");
    }
    parts.emplace_back(ring, c.generators);
  }
  if (!ideal_equal(intersect_all(parts), source)) {
    throw DomainError("certificate components do not intersect to the source ideal");
  }

  VerifiedDecomposition out;
  Rng rng(options.seed);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Ideal& q = parts[k];
    const VariableSet& prime = cert.components[k].prime;
    for (const auto& g : q.generators()) {
      if (!in_coordinate_prime(g, prime)) {
        throw DomainError("component " + std::to_string(k + 1) + " is not contained in its prime");
      }
    }
    for (std::size_t v : prime) {
      const std::size_t idx[] = {v};
      if (!saturate(q, Ideal::coordinate(ring, idx)).is_unit()) {
        throw DomainError("component " + std::to_string(k + 1) + ": variable " +
                          ring->variable_name(v) + " is not in its radical");
      }
    }
    ComponentCheck check;
    check.prime = prime;
    check.hdim = coordinate_prime_hdim(ring->nvars(), prime);
    check.random_primary = true;
    if (prime.size() < ring->nvars()) {
      for (int trial = 0; trial < options.random_checks; ++trial) {
        const Poly f = random_linear_form_avoiding(ring, prime, rng, options.coefficient_bound);
        if (!ideal_equal(colon(q, f), q)) check.random_primary = false;
      }
    }
    check.exact_primary = ideal_equal(DimensionFiltration(q).at(check.hdim), q);
    if (!check.random_primary || !check.exact_primary) {
      out.status = CertificateStatus::radical_verified_only;
      out.warnings.push_back("component " + std::to_string(k + 1) +
                             " is not primary to its claimed prime");
    }
    out.components.push_back(std::move(check));
  }

  const int n = ring->n();
  for (int r = -1; r <= n + 1; ++r) {
    std::vector<Ideal> kept;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (out.components[k].hdim >= r) kept.push_back(parts[k]);
    }
    out.filtration.emplace(r, kept.empty() ? Ideal::unit(ring) : intersect_all(kept));
  }
  return out;
}

ArithProfile certificate_profile(const RingPtr& ring, const DecompositionCertificate& cert,
                                 const VerifiedDecomposition& verified) {
  if (verified.status != CertificateStatus::verified) {
    throw DomainError("the certificate is only radical-verified");
  }
  return ArithDegree(Ideal(ring, cert.source), verified.filtration).profile();
}

}  // namespace arithdeg
