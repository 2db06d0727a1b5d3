#include "arithdeg/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "arithdeg/error.hpp"
#include "arithdeg/groebner.hpp"

namespace arithdeg {

struct Ideal::Cache {
  std::mutex mutex;
  std::optional<std::vector<Poly>> basis;
};

namespace {

// x^a in S becomes t^lead * x^a in the ring with one prepended variable.
Monomial prepend(const Monomial& m, Exponent lead) {
  std::vector<Exponent> exps(m.size() + 1, 0);
  exps[0] = lead;
  for (std::size_t i = 0; i < m.size(); ++i) exps[i + 1] = m[i];
  return Monomial(std::span<const Exponent>(exps.data(), exps.size()));
}

Monomial drop_first(const Monomial& m) {
  const auto exps = m.exponents();
  return Monomial(exps.subspan(1));
}

Poly lift(const Poly& f, const RingPtr& target, Exponent t_power) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({prepend(t.mono, t_power), t.coeff});
  return Poly::from_terms(target, std::move(terms));
}

std::vector<Poly> to_polys(const RingPtr& ring, const std::vector<Vec>& basis) {
  std::vector<Poly> out;
  out.reserve(basis.size());
  for (const auto& v : basis) out.push_back(to_poly(ring, v));
  return out;
}

void require_same(const Ideal& a, const Ideal& b, const char* what) {
  if (!same_ring(a.ring(), b.ring())) {
    throw RingMismatch(std::string(what) + ": ideals live in different rings");
  }
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators, std::string provenance)
    : ring_(std::move(ring)),
      provenance_(std::move(provenance)),
      cache_(std::make_shared<Cache>()) {
  if (!ring_) throw DomainError("ideal without a ring");
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("generator from another ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) {
      throw DomainError("generator is not homogeneous: " + g.render());
    }
    generators_.push_back(std::move(g));
  }
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}, "zero"); }

Ideal Ideal::unit(RingPtr ring) {
  Poly one = Poly::constant(ring, Coeff(1));
  return Ideal(std::move(ring), {std::move(one)}, "unit");
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Poly::variable(ring, i));
  return Ideal(std::move(ring), std::move(gens), "maximal");
}

Ideal Ideal::coordinate(RingPtr ring, std::span<const std::size_t> variables) {
  std::vector<Poly> gens;
  for (std::size_t i : variables) gens.push_back(Poly::variable(ring, i));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::from_monomials(RingPtr ring, const MonomialIdeal& m,
                            std::string provenance) {
  if (m.nvars() != ring->nvars()) throw RingMismatch("monomial ideal width");
  std::vector<Poly> gens;
  for (const auto& g : m.generators()) gens.push_back(Poly::monomial(ring, g));
  return Ideal(std::move(ring), std::move(gens), std::move(provenance));
}

const std::vector<Poly>& Ideal::groebner_basis() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) {
    const ModuleSpace space = ModuleSpace::of_ring(ring_);
    std::vector<Vec> inputs;
    inputs.reserve(generators_.size());
    for (const auto& g : generators_) inputs.push_back(to_vec(space, g));
    cache_->basis = to_polys(ring_, arithdeg::groebner_basis(space, std::move(inputs)).basis);
  }
  return *cache_->basis;
}

bool Ideal::is_zero() const { return generators_.empty(); }

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_monomial() const {
  const auto& gb = groebner_basis();
  return std::all_of(gb.begin(), gb.end(), [](const Poly& g) { return g.is_monomial(); });
}

bool Ideal::contains(const Poly& f) const { return normal_form(f, *this).is_zero(); }

Ideal Ideal::with_basis_generators() const {
  Ideal out(ring_, groebner_basis(), provenance_);
  out.cache_ = cache_;
  return out;
}

std::string Ideal::render() const {
  if (generators_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k) out += ", ";
    out += generators_[k].render();
  }
  return out + ")";
}

Ideal buchberger(std::vector<Poly> generators, const RingPtr& ring) {
  return Ideal(ring, std::move(generators)).with_basis_generators();
}

Poly normal_form(const Poly& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw RingMismatch("normal form");
  const ModuleSpace space = ModuleSpace::of_ring(ideal.ring());
  std::vector<Vec> basis;
  for (const auto& g : ideal.groebner_basis()) basis.push_back(to_vec(space, g));
  return to_poly(ideal.ring(), reduce(space, to_vec(space, f), basis));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same(a, b, "ideal_equal");
  return a.groebner_basis() == b.groebner_basis();
}

bool ideal_subset(const Ideal& a, const Ideal& b) {
  require_same(a, b, "ideal_subset");
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Poly& g) { return b.contains(g); });
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same(a, b, "ideal_sum");
  std::vector<Poly> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same(a, b, "ideal_product");
  std::vector<Poly> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal add_generators(const Ideal& a, std::span<const Poly> extra) {
  std::vector<Poly> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same(a, b, "intersect");
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const RingPtr& ring = a.ring();
  const RingPtr lifted = ring->with_leading_variables(
      1, "t", TermOrder::block(1, ring->order().kind()));
  const ModuleSpace space = ModuleSpace::of_ring(lifted);
  std::vector<Vec> inputs;
  for (const auto& f : a.generators()) inputs.push_back(to_vec(space, lift(f, lifted, 1)));
  for (const auto& g : b.generators()) {
    const Poly lg = lift(g, lifted, 0);
    inputs.push_back(to_vec(space, lg - lift(g, lifted, 1)));
  }
  std::vector<Poly> kept;
  for (const auto& v : arithdeg::groebner_basis(space, std::move(inputs)).basis) {
    if (v.front().mono[0] != 0) continue;
    std::vector<Term> terms;
    for (const auto& t : v) terms.push_back({drop_first(t.mono), t.coeff});
    kept.push_back(Poly::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(kept)).with_basis_generators();
}

Ideal intersect_all(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw DomainError("intersection of no ideals");
  Ideal out = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) out = intersect(out, ideals[k]);
  return out;
}

Ideal colon(const Ideal& ideal, const Poly& f) {
  if (!same_ring(f.ring(), ideal.ring())) throw RingMismatch("colon");
  if (f.is_zero() || ideal.contains(f)) return Ideal::unit(ideal.ring());
  const Ideal both = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Poly> gens;
  for (const auto& g : both.generators()) gens.push_back(divide_exact(g, f));
  return Ideal(ideal.ring(), std::move(gens)).with_basis_generators();
}

Ideal colon(const Ideal& ideal, const Ideal& by) {
  require_same(ideal, by, "colon");
  std::vector<Ideal> parts;
  for (const auto& g : by.generators()) parts.push_back(colon(ideal, g));
  if (parts.empty()) return Ideal::unit(ideal.ring());
  return intersect_all(parts);
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  Ideal current = ideal;
  while (true) {
    Ideal next = colon(current, by);
    if (ideal_equal(next, current)) return current;
    current = std::move(next);
  }
}

Ideal eliminate(const Ideal& ideal, std::size_t k) {
  const RingPtr& ring = ideal.ring();
  if (k > ring->nvars()) throw DomainError("cannot eliminate more variables than the ring has");
  if (k == 0) return ideal.with_basis_generators();
  const RingPtr blocked = ring->with_order(TermOrder::block(k, ring->order().kind()));
  const ModuleSpace space = ModuleSpace::of_ring(blocked);
  std::vector<Vec> inputs;
  for (const auto& g : ideal.generators()) inputs.push_back(to_vec(space, g.in_ring(blocked)));
  std::vector<Poly> kept;
  for (const auto& v : arithdeg::groebner_basis(space, std::move(inputs)).basis) {
    const Monomial& lead = v.front().mono;
    bool free = true;
    for (std::size_t i = 0; i < k && free; ++i) free = lead[i] == 0;
    if (free) kept.push_back(to_poly(blocked, v).in_ring(ring));
  }
  return Ideal(ring, std::move(kept)).with_basis_generators();
}

MonomialIdeal leading_term_ideal(const Ideal& ideal) {
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebner_basis()) leads.push_back(g.leading_monomial());
  return MonomialIdeal(ideal.ring()->nvars(), std::move(leads));
}

MonomialIdeal to_monomial_ideal(const Ideal& ideal) {
  if (!ideal.is_monomial()) throw DomainError("the ideal is not monomial");
  return leading_term_ideal(ideal);
}

bool is_nonzerodivisor(const Poly& f, const Ideal& ideal) {
  return ideal_equal(colon(ideal, f), ideal);
}

}  // namespace arithdeg
