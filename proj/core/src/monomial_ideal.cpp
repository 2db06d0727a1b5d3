#include "arithdeg/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "arithdeg/error.hpp"
#include "arithdeg/linalg.hpp"
#include "arithdeg/poly.hpp"

namespace arithdeg {

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) {
  return compare_with(OrderKind::lex, a, b, 0, a.size()) > 0;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_greater(a, b);
  });
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial& k) { return k.divides(g); });
    if (!covered) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), lex_greater);
  return kept;
}

VariableSet support_of(const Monomial& m) {
  VariableSet out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0) out.push_back(i);
  }
  return out;
}

void split(std::size_t nvars, const std::vector<Monomial>& gens,
           std::vector<MonomialIdeal>& out) {
  auto it = std::find_if(gens.begin(), gens.end(),
                         [](const Monomial& g) { return g.support_size() >= 2; });
  if (it == gens.end()) {
    MonomialIdeal leaf(nvars, gens);
    if (std::find(out.begin(), out.end(), leaf) == out.end()) out.push_back(leaf);
    return;
  }
  const Monomial& g = *it;
  const std::size_t first = support_of(g).front();
  const Monomial u = Monomial::variable(nvars, first, g[first]);
  const Monomial v = g / u;
  for (const Monomial& piece : {u, v}) {
    std::vector<Monomial> next;
    next.reserve(gens.size());
    for (const auto& h : gens) {
      if (!(h == g)) next.push_back(h);
    }
    next.push_back(piece);
    split(nvars, minimalize(std::move(next)), out);
  }
}

}  // namespace

int coordinate_prime_hdim(std::size_t nvars, const VariableSet& prime) {
  return static_cast<int>(nvars) - static_cast<int>(prime.size()) - 1;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators)
    : nvars_(nvars) {
  for (const auto& g : generators) {
    if (g.size() != nvars) throw RingMismatch("monomial width does not match the ideal");
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  return MonomialIdeal(nvars, {Monomial(nvars)});
}

MonomialIdeal MonomialIdeal::coordinate(std::size_t nvars, const VariableSet& vars) {
  std::vector<Monomial> gens;
  for (std::size_t v : vars) gens.push_back(Monomial::variable(nvars, v));
  return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

std::int64_t MonomialIdeal::max_degree() const {
  std::int64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

VariableSet MonomialIdeal::support() const {
  std::set<std::size_t> vars;
  for (const auto& g : gens_) {
    for (std::size_t v : support_of(g)) vars.insert(v);
  }
  return {vars.begin(), vars.end()};
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  if (other.nvars_ != nvars_) throw RingMismatch("sum of monomial ideals");
  std::vector<Monomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g / gcd(g, m));
  return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon_variables(const VariableSet& vars) const {
  if (vars.empty()) return *this;
  MonomialIdeal out = colon(Monomial::variable(nvars_, vars.front()));
  for (std::size_t k = 1; k < vars.size(); ++k) {
    out = intersect(out, colon(Monomial::variable(nvars_, vars[k])));
  }
  return out;
}

MonomialIdeal MonomialIdeal::saturate(const VariableSet& vars) const {
  MonomialIdeal current = *this;
  while (true) {
    MonomialIdeal next = current.colon_variables(vars);
    if (next == current) return current;
    current = std::move(next);
  }
}

MonomialIdeal MonomialIdeal::localize(const VariableSet& keep) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) {
    Monomial h(nvars_);
    for (std::size_t v : keep) h = h.with_exponent(v, g[v]);
    gens.push_back(h);
  }
  return MonomialIdeal(nvars_, std::move(gens));
}

std::string MonomialIdeal::render(const PolyRing& ring) const {
  if (gens_.empty()) return "(0)";
  RingPtr shared = std::make_shared<const PolyRing>(ring);
  std::string out = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) out += ", ";
    out += Poly::monomial(shared, gens_[k]).render();
  }
  return out + ")";
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars_ != b.nvars_) throw RingMismatch("intersection of monomial ideals");
  std::vector<Monomial> gens;
  gens.reserve(a.gens_.size() * b.gens_.size());
  for (const auto& f : a.gens_) {
    for (const auto& g : b.gens_) gens.push_back(lcm(f, g));
  }
  return MonomialIdeal(a.nvars_, std::move(gens));
}

MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals,
                            std::size_t nvars) {
  MonomialIdeal out = MonomialIdeal::unit(nvars);
  for (const auto& m : ideals) out = intersect(out, m);
  return out;
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& m) {
  if (m.is_unit()) throw DomainError("the unit ideal has no decomposition");
  std::vector<MonomialIdeal> leaves;
  split(m.nvars(), {m.generators().begin(), m.generators().end()}, leaves);
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leaves.size() && !redundant; ++j) {
      redundant = j != i && leaves[i].contains(leaves[j]) &&
                  !(leaves[j].contains(leaves[i]) && j > i);
    }
    if (!redundant) out.push_back(leaves[i]);
  }
  return out;
}

Decomposition primary_decomposition(const MonomialIdeal& m) {
  std::map<VariableSet, std::vector<MonomialIdeal>> groups;
  for (auto& q : irreducible_decomposition(m)) groups[q.support()].push_back(std::move(q));
  Decomposition out{m, {}};
  for (auto& [prime, members] : groups) {
    out.components.push_back(PrimaryComponent{
        intersect_all(members, m.nvars()), prime,
        coordinate_prime_hdim(m.nvars(), prime), 1});
  }
  std::stable_sort(out.components.begin(), out.components.end(),
                   [](const PrimaryComponent& a, const PrimaryComponent& b) {
                     if (a.hdim != b.hdim) return a.hdim > b.hdim;
                     return a.prime < b.prime;
                   });
  return out;
}

std::vector<VariableSet> associated_primes(const MonomialIdeal& m) {
  std::vector<VariableSet> out;
  for (auto& c : primary_decomposition(m).components) out.push_back(c.prime);
  return out;
}

MonomialIdeal dimension_filtration_monomial(const MonomialIdeal& m, int r) {
  if (m.is_unit()) return m;
  MonomialIdeal out = MonomialIdeal::unit(m.nvars());
  for (const auto& c : primary_decomposition(m).components) {
    if (c.hdim >= r) out = intersect(out, c.ideal);
  }
  return out;
}

long length_multiplicity(const MonomialIdeal& m, const VariableSet& prime) {
  if (m.is_unit()) return 0;
  const MonomialIdeal local = m.localize(prime);
  const MonomialIdeal sat = local.saturate(prime);
  if (sat == local) return 0;
  // A standard monomial u of `local` with u_i >= max_i stays outside `local`
  // after any multiplication by x_i, so it cannot lie in the saturation.
  std::vector<Exponent> bound(m.nvars(), 0);
  for (const auto& g : local.generators()) {
    for (std::size_t v : prime) bound[v] = std::max(bound[v], g[v]);
  }
  long count = 0;
  std::vector<Exponent> exps(m.nvars(), 0);
  while (true) {
    const Monomial u(std::span<const Exponent>(exps.data(), exps.size()));
    if (sat.contains(u) && !local.contains(u)) ++count;
    std::size_t k = 0;
    for (; k < prime.size(); ++k) {
      const std::size_t v = prime[k];
      if (exps[v] + 1 < bound[v]) {
        ++exps[v];
        break;
      }
      exps[v] = 0;
    }
    if (k == prime.size()) break;
  }
  return count;
}

BettiTable lcm_betti(const MonomialIdeal& m, const Field& field) {
  const std::size_t n = m.nvars();
  BettiTable table(n);
  if (m.is_unit()) return table;
  table.add(0, 0, 1);
  std::set<std::vector<Exponent>> lattice;
  std::vector<Monomial> frontier(m.generators().begin(), m.generators().end());
  for (const auto& g : frontier) {
    lattice.insert({g.exponents().begin(), g.exponents().end()});
  }
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& a : frontier) {
      for (const auto& g : m.generators()) {
        const Monomial l = lcm(a, g);
        if (lattice.insert({l.exponents().begin(), l.exponents().end()}).second) {
          next.push_back(l);
        }
      }
    }
    frontier = std::move(next);
  }

  for (const auto& exps : lattice) {
    const Monomial b(std::span<const Exponent>(exps.data(), exps.size()));
    const VariableSet supp = support_of(b);
    const std::size_t s = supp.size();
    // faces[k] holds the faces with k vertices, as bitmasks over supp.
    std::vector<std::vector<std::uint32_t>> faces(s + 1);
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
      Monomial tau(n);
      for (std::size_t k = 0; k < s; ++k) {
        if (mask & (1u << k)) tau = tau.with_exponent(supp[k], 1);
      }
      if (m.contains(b / tau)) faces[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
    // rank of the boundary from k-vertex faces to (k-1)-vertex faces.
    std::vector<std::size_t> rank(s + 2, 0);
    for (std::size_t k = 1; k <= s; ++k) {
      if (faces[k].empty() || faces[k - 1].empty()) continue;
      std::map<std::uint32_t, std::size_t> row_of;
      for (std::size_t r = 0; r < faces[k - 1].size(); ++r) row_of[faces[k - 1][r]] = r;
      DenseMatrix matrix(faces[k].size(), std::vector<Coeff>(faces[k - 1].size(), field.zero()));
      for (std::size_t c = 0; c < faces[k].size(); ++c) {
        const std::uint32_t mask = faces[k][c];
        int sign = 1;
        for (std::size_t v = 0; v < s; ++v) {
          if (!(mask & (1u << v))) continue;
          const auto it = row_of.find(mask & ~(1u << v));
          if (it != row_of.end()) matrix[c][it->second] = field.from_int(sign);
          sign = -sign;
        }
      }
      rank[k] = matrix_rank(field, std::move(matrix));
    }
    // Reduced homology in dimension k - 1 lives on faces with k vertices.
    for (std::size_t k = 0; k <= s; ++k) {
      const long h = static_cast<long>(faces[k].size()) -
                     static_cast<long>(rank[k]) - static_cast<long>(rank[k + 1]);
      if (h > 0) table.add(static_cast<int>(k) + 1, b.degree(), h);
    }
  }
  return table;
}

std::string render_variables(const PolyRing& ring, const VariableSet& vars) {
  if (vars.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (k) out += ", ";
    out += ring.variable_name(vars[k]);
  }
  return out + ")";
}

}  // namespace arithdeg
