#ifndef ARITHDEG_ARITH_DEGREE_HPP
#define ARITHDEG_ARITH_DEGREE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arithdeg/hilbert.hpp"
#include "arithdeg/ideal.hpp"
#include "arithdeg/monomial_ideal.hpp"
#include "arithdeg/resolution.hpp"

namespace arithdeg {

enum class ArithRoute { lemma25, direct, minus1, certificate };
std::string route_name(ArithRoute route);

struct ArithEntry {
  int r = 0;
  std::int64_t value = 0;
  /// Every route that produced `value`; they agree by construction.
  std::vector<ArithRoute> routes;
};

/// arith-deg_r for r = -1, ..., n.
struct ArithProfile {
  std::vector<ArithEntry> entries;

  std::int64_t at(int r) const;
};

/// How I>=r is obtained inside the Hilbert-polynomial routes.
enum class FiltrationRoute {
  /// Monomial decomposition for monomial ideals, Ext saturation otherwise.
  automatic,
  ext,
  monomial,
};

/// Per-ideal engine: caches the filtration levels and their Hilbert data.
/// Not thread-safe; use one instance per thread.
class ArithDegree {
 public:
  explicit ArithDegree(Ideal ideal, FiltrationRoute route = FiltrationRoute::automatic);
  /// Uses a caller-supplied filtration, for instance one read off a
  /// verified certificate. levels[r] must hold I>=r for -1 <= r <= n + 1.
  ArithDegree(Ideal ideal, std::map<int, Ideal> levels);

  const Ideal& ideal() const noexcept { return ideal_; }
  const Ideal& filtration(int r);
  const HilbertSeries& series(int r);
  const HilbertPolyData& polynomial(int r);

  /// Delta^r (P(S/I) - P(S/I>=r+1)); r >= 0.
  std::int64_t lemma25(int r);
  /// sum over l of H(S/I, l) - H(S/I>=0, l).
  std::int64_t minus1();
  /// sum of length multiplicities over associated primes of h-dim r;
  /// nullopt unless the ideal is monomial.
  std::optional<std::int64_t> direct(int r);
  /// lemma25 or minus1 according to r.
  std::int64_t at(int r);
  /// All levels, every applicable route; InternalError on disagreement.
  ArithProfile profile();

 private:
  Ideal ideal_;
  FiltrationRoute route_;
  std::unique_ptr<DimensionFiltration> ext_;
  std::optional<MonomialIdeal> monomial_;
  std::map<int, Ideal> levels_;
  std::map<int, HilbertSeries> series_;
  std::map<int, HilbertPolyData> polys_;
  bool supplied_ = false;
};

std::int64_t arith_deg_lemma25(const Ideal& ideal, int r);
std::int64_t arith_deg_direct(const MonomialIdeal& m, int r);
std::int64_t arith_deg_minus1(const Ideal& ideal);
/// lemma25 for r >= 0, minus1 for r = -1, zero for r > n.
std::int64_t arith_deg(const Ideal& ideal, int r);
ArithProfile arith_profile(const Ideal& ideal);

struct CertificateComponent {
  std::vector<Poly> generators;
  VariableSet prime;
};

struct DecompositionCertificate {
  std::string name;
  std::vector<Poly> source;
  std::vector<CertificateComponent> components;
  std::string provenance;
};

enum class CertificateStatus { verified, radical_verified_only };
std::string status_name(CertificateStatus status);

struct ComponentCheck {
  VariableSet prime;
  int hdim = 0;
  /// (q : f) == q for every random linear form f outside p.
  bool random_primary = false;
  /// q == q>=h-dim(p), i.e. p is the only associated prime.
  bool exact_primary = false;
};

struct VerifiedDecomposition {
  CertificateStatus status = CertificateStatus::verified;
  std::vector<ComponentCheck> components;
  std::vector<std::string> warnings;
  /// I>=r read off the components, for -1 <= r <= n + 1.
  std::map<int, Ideal> filtration;
};

struct CertificateOptions {
  int random_checks = 3;
  std::uint64_t seed = 1;
  std::int64_t coefficient_bound = 100;
};

/// Checks that the components intersect to the source, that every
/// component q with claimed prime p satisfies q in p and p in rad(q), and
/// that q is p-primary. Throws DomainError on an intersection or radical
/// mismatch; a failed primariness check downgrades the status.
VerifiedDecomposition verify_certificate(const RingPtr& ring, const DecompositionCertificate& cert,
                                         const CertificateOptions& options = {});
/// Profile computed from a verified certificate's filtration.
ArithProfile certificate_profile(const RingPtr& ring, const DecompositionCertificate& cert,
                                 const VerifiedDecomposition& verified);

}  // namespace arithdeg

#endif  // ARITHDEG_ARITH_DEGREE_HPP
