#include "arithdeg/resolution.hpp"

#include <algorithm>

#include "arithdeg/error.hpp"
#include "arithdeg/hilbert.hpp"

namespace arithdeg {

namespace {

Poly zero_poly(const RingPtr& ring) { return Poly(ring); }

std::vector<std::int64_t> negated(const std::vector<std::int64_t>& twists) {
  std::vector<std::int64_t> out;
  out.reserve(twists.size());
  for (auto t : twists) out.push_back(-t);
  return out;
}

std::int64_t vec_degree(const ModuleSpace& space, const Vec& v) {
  const auto d = space.homogeneous_degree(v);
  if (!d) throw DomainError("module element is not homogeneous");
  return *d;
}

std::vector<Vec> shift_components(const std::vector<Vec>& vecs, std::uint32_t offset) {
  std::vector<Vec> out;
  out.reserve(vecs.size());
  for (const auto& v : vecs) {
    Vec w;
    w.reserve(v.size());
    for (const auto& t : v) w.push_back({t.mono, t.comp - offset, t.coeff});
    out.push_back(std::move(w));
  }
  return out;
}

bool is_unit_entry(const Poly& p) { return !p.is_zero() && p.is_constant(); }

}  // namespace

ModuleSpace FreeModule::space(ModuleOrderKind kind) const {
  ModuleSpace s;
  s.ring = ring;
  s.twists = twists;
  s.kind = kind;
  return s;
}

GradedMap::GradedMap(FreeModule source, FreeModule target,
                     std::vector<std::vector<Poly>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!same_ring(source_.ring, target_.ring)) throw RingMismatch("graded map");
  if (matrix_.size() != target_.rank()) throw DomainError("matrix row count mismatch");
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (matrix_[i].size() != source_.rank()) throw DomainError("matrix column count mismatch");
    for (std::size_t j = 0; j < matrix_[i].size(); ++j) {
      const Poly& p = matrix_[i][j];
      if (p.is_zero()) continue;
      const auto h = p.homogeneity();
      const std::int64_t want = source_.twists[j] - target_.twists[i];
      if (!h || !h->degree || *h->degree != want) {
        throw DomainError("matrix entry has the wrong degree");
      }
    }
  }
}

GradedMap GradedMap::from_columns(FreeModule source, FreeModule target,
                                  const std::vector<Vec>& columns) {
  if (columns.size() != source.rank()) throw DomainError("column count mismatch");
  std::vector<std::vector<Poly>> matrix(target.rank());
  for (std::size_t i = 0; i < target.rank(); ++i) {
    for (const auto& col : columns) {
      matrix[i].push_back(to_poly(target.ring, col, static_cast<std::uint32_t>(i)));
    }
  }
  return GradedMap(std::move(source), std::move(target), std::move(matrix));
}

std::vector<Vec> GradedMap::columns(const ModuleSpace& target_space) const {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < source_.rank(); ++j) {
    Vec v;
    for (std::size_t i = 0; i < target_.rank(); ++i) {
      for (const auto& t : matrix_[i][j].terms()) {
        v.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
      }
    }
    out.push_back(target_space.normalize(std::move(v)));
  }
  return out;
}

bool GradedMap::is_zero() const {
  return std::all_of(matrix_.begin(), matrix_.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const Poly& p) { return p.is_zero(); });
  });
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
  if (!(inner.target_ == source_)) throw DomainError("maps are not composable");
  std::vector<std::vector<Poly>> out(target_.rank());
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    for (std::size_t k = 0; k < inner.source_.rank(); ++k) {
      Poly acc = zero_poly(target_.ring);
      for (std::size_t j = 0; j < source_.rank(); ++j) {
        if (matrix_[i][j].is_zero() || inner.matrix_[j][k].is_zero()) continue;
        acc = acc + matrix_[i][j] * inner.matrix_[j][k];
      }
      out[i].push_back(std::move(acc));
    }
  }
  return GradedMap(inner.source_, target_, std::move(out));
}

GradedMap GradedMap::transpose() const {
  std::vector<std::vector<Poly>> out(source_.rank());
  for (std::size_t j = 0; j < source_.rank(); ++j) {
    for (std::size_t i = 0; i < target_.rank(); ++i) out[j].push_back(matrix_[i][j]);
  }
  return GradedMap(FreeModule{target_.ring, negated(target_.twists)},
                   FreeModule{source_.ring, negated(source_.twists)}, std::move(out));
}

std::vector<Vec> kernel(const ModuleSpace& target,
                        const std::vector<std::int64_t>& source_twists,
                        const std::vector<Vec>& images, bool minimal) {
  if (images.size() != source_twists.size()) throw DomainError("kernel: twist count mismatch");
  const std::uint32_t t = static_cast<std::uint32_t>(target.rank());
  ModuleSpace combined;
  combined.ring = target.ring;
  combined.twists = target.twists;
  combined.twists.insert(combined.twists.end(), source_twists.begin(), source_twists.end());
  combined.kind = ModuleOrderKind::term_over_position;
  combined.eliminate_first = t;
  std::vector<Vec> inputs;
  inputs.reserve(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    Vec v = images[j];
    v.push_back({target.ring->one(), t + static_cast<std::uint32_t>(j), Coeff(1)});
    inputs.push_back(std::move(v));
  }
  std::vector<Vec> found;
  for (auto& v : groebner_basis(combined, std::move(inputs)).basis) {
    if (v.front().comp >= t) found.push_back(std::move(v));
  }
  found = shift_components(found, t);
  if (!minimal || found.empty()) return found;

  ModuleSpace source;
  source.ring = target.ring;
  source.twists = source_twists;
  source.kind = ModuleOrderKind::term_over_position;
  for (auto& v : found) v = source.normalize(std::move(v));
  GroebnerOptions options;
  options.track_minimal_inputs = true;
  const auto picked = groebner_basis(source, found, options).minimal_inputs;
  std::vector<Vec> out;
  out.reserve(picked.size());
  for (std::size_t k : picked) out.push_back(found[k]);
  return out;
}

std::vector<Vec> module_gb(const FreeModule& module, std::vector<Vec> generators) {
  const ModuleSpace space = module.space(ModuleOrderKind::position_over_term);
  for (const auto& g : generators) {
    if (!g.empty()) vec_degree(space, g);
  }
  return groebner_basis(space, std::move(generators)).basis;
}

GradedMap syzygy(const GradedMap& m) {
  const ModuleSpace target = m.target().space();
  const std::vector<Vec> gens = kernel(target, m.source().twists, m.columns(target), true);
  const ModuleSpace source = m.source().space();
  std::vector<std::int64_t> twists;
  for (const auto& g : gens) twists.push_back(vec_degree(source, g));
  return GradedMap::from_columns(FreeModule{m.source().ring, twists}, m.source(), gens);
}

FreeModule Resolution::module(std::size_t i) const {
  if (i == 0) {
    if (maps.empty()) throw DomainError("empty resolution has no recorded ring");
    return maps.front().target();
  }
  return maps.at(i - 1).source();
}

void minimalize(std::vector<GradedMap>& maps) {
  while (true) {
    std::size_t level = maps.size();
    std::size_t r = 0;
    std::size_t c = 0;
    for (std::size_t i = 0; i < maps.size() && level == maps.size(); ++i) {
      const auto& mat = maps[i].matrix();
      for (std::size_t a = 0; a < mat.size() && level == maps.size(); ++a) {
        for (std::size_t b = 0; b < mat[a].size(); ++b) {
          if (is_unit_entry(mat[a][b])) {
            level = i;
            r = a;
            c = b;
            break;
          }
        }
      }
    }
    if (level == maps.size()) break;
    if (level == 0) throw InternalError("unit entry in the first map of a resolution");

    const RingPtr ring = maps[level].source().ring;
    const Field& field = ring->field();
    auto d = maps[level].matrix();
    const Coeff inv = field.inv(d[r][c].leading_coeff());
    const std::size_t rows = d.size();
    const std::size_t cols = d[r].size();

    std::optional<std::vector<std::vector<Poly>>> next;
    if (level + 1 < maps.size()) next = maps[level + 1].matrix();
    auto prev = maps[level - 1].matrix();

    // Column operations clear row r outside column c.
    for (std::size_t b = 0; b < cols; ++b) {
      if (b == c || d[r][b].is_zero()) continue;
      const Poly factor = d[r][b].scaled(inv);
      for (std::size_t a = 0; a < rows; ++a) {
        if (!d[a][c].is_zero()) d[a][b] = d[a][b] - factor * d[a][c];
      }
      if (next) {
        auto& nx = *next;
        for (std::size_t k = 0; k < nx[c].size(); ++k) {
          if (!nx[b][k].is_zero()) nx[c][k] = nx[c][k] + factor * nx[b][k];
        }
      }
    }
    // Row operations clear column c outside row r.
    for (std::size_t a = 0; a < rows; ++a) {
      if (a == r || d[a][c].is_zero()) continue;
      const Poly factor = d[a][c].scaled(inv);
      for (std::size_t b = 0; b < cols; ++b) {
        if (!d[r][b].is_zero()) d[a][b] = d[a][b] - factor * d[r][b];
      }
      for (auto& row : prev) {
        if (!row[a].is_zero()) row[r] = row[r] + factor * row[a];
      }
    }
    for (const auto& row : prev) {
      if (!row[r].is_zero()) throw InternalError("minimalization left a nonzero column");
    }
    if (next) {
      for (const auto& p : (*next)[c]) {
        if (!p.is_zero()) throw InternalError("minimalization left a nonzero row");
      }
    }

    FreeModule lower = maps[level].target();
    FreeModule upper = maps[level].source();
    lower.twists.erase(lower.twists.begin() + static_cast<std::ptrdiff_t>(r));
    upper.twists.erase(upper.twists.begin() + static_cast<std::ptrdiff_t>(c));
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(r));
    for (auto& row : d) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
    for (auto& row : prev) row.erase(row.begin() + static_cast<std::ptrdiff_t>(r));

    maps[level - 1] = GradedMap(lower, maps[level - 1].target(), std::move(prev));
    maps[level] = GradedMap(upper, lower, std::move(d));
    if (next) {
      next->erase(next->begin() + static_cast<std::ptrdiff_t>(c));
      maps[level + 1] = GradedMap(maps[level + 1].source(), upper, std::move(*next));
    }
    while (!maps.empty() && maps.back().source().rank() == 0) maps.pop_back();
  }
}

BettiTable betti_from_maps(const RingPtr& ring, const std::vector<GradedMap>& maps) {
  BettiTable table(ring->nvars());
  if (maps.empty()) {
    table.add(0, 0, 1);
    return table;
  }
  for (auto t : maps.front().target().twists) table.add(0, t, 1);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (auto t : maps[i].source().twists) table.add(static_cast<int>(i) + 1, t, 1);
  }
  return table;
}

Resolution free_resolution(const Ideal& ideal, const ResolutionOptions& options) {
  const RingPtr& ring = ideal.ring();
  if (ideal.is_unit()) throw DomainError("the unit ideal has no resolution of S/I");
  Resolution res;
  if (ideal.is_zero()) {
    res.betti = betti_from_maps(ring, res.maps);
    return res;
  }
  const FreeModule f0{ring, {0}};
  const ModuleSpace s0 = f0.space();
  std::vector<Vec> gens;
  for (const auto& g : ideal.generators()) gens.push_back(to_vec(s0, g));
  if (options.minimal_generators) {
    GroebnerOptions tracking;
    tracking.track_minimal_inputs = true;
    const auto picked = groebner_basis(s0, gens, tracking).minimal_inputs;
    std::vector<Vec> minimal;
    for (std::size_t k : picked) minimal.push_back(gens[k]);
    gens = std::move(minimal);
  }
  std::vector<std::int64_t> twists;
  for (const auto& g : gens) twists.push_back(vec_degree(s0, g));
  res.maps.push_back(GradedMap::from_columns(FreeModule{ring, twists}, f0, gens));
  while (true) {
    if (res.maps.size() > ring->nvars() + 1) {
      throw InternalError("resolution exceeded the syzygy bound");
    }
    GradedMap next = syzygy(res.maps.back());
    if (next.source().rank() == 0) break;
    res.maps.push_back(std::move(next));
  }
  minimalize(res.maps);
  res.betti = betti_from_maps(ring, res.maps);
  if (!verify_resolution(ideal, res)) throw InternalError("resolution failed its exactness checks");
  return res;
}

bool verify_resolution(const Ideal& ideal, const Resolution& resolution) {
  const auto& maps = resolution.maps;
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!maps[i].compose(maps[i + 1]).is_zero()) return false;
  }
  UPoly alternating = UPoly::constant(1);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (auto t : maps[i].source().twists) {
      if (t < 0) return false;
      const UPoly term = UPoly::monomial(static_cast<unsigned>(t));
      alternating = (i % 2 == 0) ? alternating - term : alternating + term;
    }
  }
  return alternating == hilbert_series(ideal).numerator;
}

std::int64_t regularity(const Ideal& ideal) {
  return free_resolution(ideal).betti.regularity() + 1;
}

int depth(const Ideal& ideal) { return free_resolution(ideal).betti.depth(); }

Ideal module_colon(const ModuleSpace& space, const std::vector<Vec>& submodule, const Vec& e) {
  const RingPtr& ring = space.ring;
  if (e.empty()) return Ideal::unit(ring);
  std::vector<Vec> images{e};
  std::vector<std::int64_t> twists{vec_degree(space, e)};
  for (const auto& b : submodule) {
    if (b.empty()) continue;
    images.push_back(b);
    twists.push_back(vec_degree(space, b));
  }
  std::vector<Poly> gens;
  for (const auto& v : kernel(space, twists, images, false)) {
    Poly p = to_poly(ring, v, 0);
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  return Ideal(ring, std::move(gens)).with_basis_generators();
}

Ideal ext_annihilator(const Ideal& ideal, const Resolution& resolution, int c) {
  const RingPtr& ring = ideal.ring();
  if (c < 0 || c > static_cast<int>(ring->nvars())) {
    throw DomainError("Ext index out of range");
  }
  const auto& maps = resolution.maps;
  const std::size_t length = maps.size();
  const std::size_t cc = static_cast<std::size_t>(c);
  if (cc > length) return Ideal::unit(ring);

  const FreeModule fc = cc == 0 ? FreeModule{ring, {0}} : maps[cc - 1].source();
  const FreeModule dual{ring, negated(fc.twists)};
  const ModuleSpace space = dual.space();

  std::vector<Vec> cycles;
  if (cc < length) {
    const GradedMap up = maps[cc].transpose();
    const ModuleSpace up_space = up.target().space();
    cycles = kernel(up_space, dual.twists, up.columns(up_space), true);
    for (auto& v : cycles) v = space.normalize(std::move(v));
  } else {
    for (std::size_t j = 0; j < dual.rank(); ++j) {
      cycles.push_back(Vec{{ring->one(), static_cast<std::uint32_t>(j), Coeff(1)}});
    }
  }
  std::vector<Vec> boundaries;
  if (cc >= 1) boundaries = maps[cc - 1].transpose().columns(space);

  std::vector<Ideal> colons;
  for (const auto& e : cycles) {
    Ideal q = module_colon(space, boundaries, e);
    if (!q.is_unit()) colons.push_back(std::move(q));
  }
  if (colons.empty()) return Ideal::unit(ring);
  return intersect_all(colons);
}

Ideal ext_annihilator(const Ideal& ideal, int c) {
  if (ideal.is_unit()) return Ideal::unit(ideal.ring());
  return ext_annihilator(ideal, free_resolution(ideal), c);
}

DimensionFiltration::DimensionFiltration(Ideal ideal) : ideal_(std::move(ideal)) {}

const Resolution& DimensionFiltration::resolution() {
  if (!resolution_) resolution_ = free_resolution(ideal_);
  return *resolution_;
}

const Ideal& DimensionFiltration::ext_annihilator(int c) {
  auto it = annihilators_.find(c);
  if (it == annihilators_.end()) {
    it = annihilators_.emplace(c, arithdeg::ext_annihilator(ideal_, resolution(), c)).first;
  }
  return it->second;
}

const Ideal& DimensionFiltration::at(int r) {
  const int n = ideal_.ring()->n();
  if (r < -1 || r > n + 1) throw DomainError("filtration index out of range");
  if (auto it = levels_.find(r); it != levels_.end()) return it->second;
  Ideal value = ideal_;
  if (r > -1 && !ideal_.is_unit()) {
    const Ideal& below = at(r - 1);
    const Ideal& factor = ext_annihilator(n - r + 1);
    value = factor.is_unit() ? below : saturate(below, factor);
  }
  return levels_.emplace(r, std::move(value)).first->second;
}

Ideal dimension_filtration(const Ideal& ideal, int r) {
  return DimensionFiltration(ideal).at(r);
}

}  // namespace arithdeg
