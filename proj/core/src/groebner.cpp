#include "arithdeg/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "arithdeg/error.hpp"

namespace arithdeg {

ModuleSpace ModuleSpace::of_ring(RingPtr ring) {
  ModuleSpace space;
  space.ring = std::move(ring);
  space.twists = {0};
  return space;
}

std::strong_ordering ModuleSpace::compare(const VecTerm& a,
                                          const VecTerm& b) const {
  if (eliminate_first > 0) {
    const bool ea = a.comp < eliminate_first;
    const bool eb = b.comp < eliminate_first;
    if (ea != eb) return ea ? std::strong_ordering::greater
                            : std::strong_ordering::less;
  }
  if (kind == ModuleOrderKind::position_over_term) {
    if (a.comp != b.comp) return b.comp <=> a.comp;
    return ring->order().compare(a.mono, b.mono);
  }
  const std::int64_t da = degree(a);
  const std::int64_t db = degree(b);
  if (da != db) return da <=> db;
  if (auto c = ring->order().compare(a.mono, b.mono); c != 0) return c;
  return b.comp <=> a.comp;
}

Vec ModuleSpace::normalize(Vec terms) const {
  const Field& field = ring->field();
  std::sort(terms.begin(), terms.end(), [&](const VecTerm& a, const VecTerm& b) {
    return compare(a, b) > 0;
  });
  Vec out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
    if (Field::is_zero(out.back().coeff)) out.pop_back();
  }
  return out;
}

Vec ModuleSpace::add_scaled(const Vec& a, const Vec& b, const Coeff& factor,
                            const Monomial& shift) const {
  const Field& field = ring->field();
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  auto shifted = [&](const VecTerm& t) {
    return VecTerm{t.mono * shift, t.comp, field.mul(factor, t.coeff)};
  };
  if (Field::is_zero(factor)) return a;
  while (i < a.size() && j < b.size()) {
    VecTerm s = shifted(b[j]);
    const auto c = compare(a[i], s);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(std::move(s));
      ++j;
    } else {
      Coeff sum = field.add(a[i].coeff, s.coeff);
      if (!Field::is_zero(sum)) out.push_back({a[i].mono, a[i].comp, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(shifted(b[j]));
  return out;
}

Vec ModuleSpace::scale(const Vec& a, const Coeff& c) const {
  const Field& field = ring->field();
  if (Field::is_zero(c)) return {};
  Vec out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back({t.mono, t.comp, field.mul(t.coeff, c)});
  return out;
}

Vec ModuleSpace::monic(const Vec& a) const {
  if (a.empty() || Field::is_one(a.front().coeff)) return a;
  return scale(a, ring->field().inv(a.front().coeff));
}

std::optional<std::int64_t> ModuleSpace::homogeneous_degree(const Vec& a) const {
  if (a.empty()) return std::nullopt;
  const std::int64_t d = degree(a.front());
  for (const auto& t : a) {
    if (degree(t) != d) return std::nullopt;
  }
  return d;
}

Vec to_vec(const ModuleSpace& space, const Poly& f, std::uint32_t comp) {
  Vec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.mono, comp, t.coeff});
  return space.normalize(std::move(v));
}

Poly to_poly(const RingPtr& ring, const Vec& v, std::uint32_t comp) {
  std::vector<Term> terms;
  for (const auto& t : v) {
    if (t.comp == comp) terms.push_back({t.mono, t.coeff});
  }
  return Poly::from_terms(ring, std::move(terms));
}

namespace {

struct Element {
  Vec v;
  Monomial lead;
  std::uint32_t comp;
  std::int64_t sugar;
  bool redundant = false;
};

struct Pending {
  std::int64_t sugar;
  // Critical pairs sort before inputs of the same sugar degree.
  int kind;
  Monomial lcm;
  std::uint32_t comp;
  std::size_t i;
  std::size_t j;
};

class Buchberger {
 public:
  Buchberger(const ModuleSpace& space, const GroebnerOptions& options)
      : space_(space),
        options_(options),
        queue_([this](const Pending& a, const Pending& b) { return less(a, b); }) {}

  GroebnerResult run(std::vector<Vec> inputs) {
    inputs_ = std::move(inputs);
    for (std::size_t k = 0; k < inputs_.size(); ++k) {
      Vec& f = inputs_[k];
      f = space_.normalize(std::move(f));
      if (f.empty()) continue;
      if (options_.track_minimal_inputs && !space_.homogeneous_degree(f)) {
        throw DomainError("minimal generators need homogeneous input");
      }
      queue_.insert(Pending{sugar_of(f), 1, f.front().mono, f.front().comp, k, k});
    }
    while (!queue_.empty()) {
      Pending item = *queue_.begin();
      queue_.erase(queue_.begin());
      if (item.kind == 1) {
        Vec h = reduce(inputs_[item.i]);
        if (!h.empty()) {
          if (options_.track_minimal_inputs) result_.minimal_inputs.push_back(item.i);
          insert(std::move(h), item.sugar);
        }
        continue;
      }
      ++result_.pairs_reduced;
      Vec h = reduce(s_vector(item.i, item.j, item.lcm));
      if (!h.empty()) insert(std::move(h), item.sugar);
    }
    finish();
    std::sort(result_.minimal_inputs.begin(), result_.minimal_inputs.end());
    return std::move(result_);
  }

  Vec reduce(Vec f) const {
    const Field& field = space_.ring->field();
    Vec done;
    std::size_t i = 0;
    while (i < f.size()) {
      const VecTerm& t = f[i];
      const Element* reducer = find_reducer(t);
      if (!reducer) {
        done.push_back(t);
        ++i;
        continue;
      }
      Vec tail(std::make_move_iterator(f.begin() + static_cast<std::ptrdiff_t>(i)),
               std::make_move_iterator(f.end()));
      const Coeff factor = field.neg(tail.front().coeff);
      const Monomial shift = tail.front().mono / reducer->lead;
      f = space_.add_scaled(tail, reducer->v, factor, shift);
      i = 0;
    }
    return done;
  }

  void seed(std::span<const Vec> basis) {
    for (const auto& g : basis) {
      if (g.empty()) continue;
      Vec m = space_.monic(g);
      elements_.push_back(Element{m, m.front().mono, m.front().comp, sugar_of(m)});
    }
  }

 private:
  bool less(const Pending& a, const Pending& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == 0) {
      const auto c = space_.compare(VecTerm{a.lcm, a.comp, Coeff(1)},
                                    VecTerm{b.lcm, b.comp, Coeff(1)});
      if (c != 0) return c < 0;
    }
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  std::int64_t sugar_of(const Vec& f) const {
    std::int64_t s = space_.degree(f.front());
    for (const auto& t : f) s = std::max(s, space_.degree(t));
    return s;
  }

  const Element* find_reducer(const VecTerm& t) const {
    for (const auto& e : elements_) {
      if (!e.redundant && e.comp == t.comp && e.lead.divides(t.mono)) return &e;
    }
    return nullptr;
  }

  Vec s_vector(std::size_t i, std::size_t j, const Monomial& l) const {
    const Element& a = elements_[i];
    const Element& b = elements_[j];
    const Field& field = space_.ring->field();
    Vec left = space_.add_scaled({}, a.v, field.one(), l / a.lead);
    return space_.add_scaled(left, b.v, field.neg(field.one()), l / b.lead);
  }

  void insert(Vec h, std::int64_t sugar) {
    h = space_.monic(h);
    const std::size_t k = elements_.size();
    elements_.push_back(Element{std::move(h), {}, 0, sugar});
    Element& e = elements_.back();
    e.lead = e.v.front().mono;
    e.comp = e.v.front().comp;
    update(k);
  }

  // Gebauer-Moeller installation of element k.
  void update(std::size_t k) {
    const Element& h = elements_[k];
    struct Candidate {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      const Element& g = elements_[i];
      if (g.redundant || g.comp != h.comp) continue;
      // The product criterion only holds in rank one.
      const bool coprime = space_.rank() == 1 && g.lead.coprime(h.lead);
      fresh.push_back({i, lcm(g.lead, h.lead), coprime});
    }
    result_.pairs_considered += fresh.size();

    // Chain criterion among the new pairs.
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Candidate& p = fresh[a];
      bool drop = false;
      if (!p.coprime) {
        for (std::size_t b = a + 1; b < fresh.size() && !drop; ++b) {
          drop = fresh[b].lcm.divides(p.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !drop; ++b) {
          drop = kept[b].lcm.divides(p.lcm);
        }
      }
      if (!drop) kept.push_back(p);
    }

    // Old pairs made superfluous by the new leading term.
    for (auto it = queue_.begin(); it != queue_.end();) {
      const Pending& p = *it;
      if (p.kind == 0 && p.comp == h.comp && h.lead.divides(p.lcm) &&
          lcm(elements_[p.i].lead, h.lead) != p.lcm &&
          lcm(elements_[p.j].lead, h.lead) != p.lcm) {
        it = queue_.erase(it);
      } else {
        ++it;
      }
    }

    // Product criterion.
    for (const auto& p : kept) {
      if (p.coprime) continue;
      const Element& g = elements_[p.i];
      const std::int64_t sugar =
          std::max(g.sugar + (p.lcm.degree() - g.lead.degree()),
                   h.sugar + (p.lcm.degree() - h.lead.degree()));
      queue_.insert(Pending{sugar, 0, p.lcm, h.comp, p.i, k});
    }

    for (std::size_t i = 0; i < k; ++i) {
      Element& g = elements_[i];
      if (!g.redundant && g.comp == h.comp && h.lead.divides(g.lead)) {
        g.redundant = true;
      }
    }
  }

  void finish() {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!elements_[i].redundant) active.push_back(i);
    }
    std::vector<Vec> basis;
    basis.reserve(active.size());
    for (std::size_t idx : active) {
      Element& e = elements_[idx];
      Vec head{e.v.front()};
      Vec tail(e.v.begin() + 1, e.v.end());
      Vec reduced_tail = reduce(std::move(tail));
      head.insert(head.end(), std::make_move_iterator(reduced_tail.begin()),
                  std::make_move_iterator(reduced_tail.end()));
      basis.push_back(space_.monic(head));
    }
    std::sort(basis.begin(), basis.end(), [&](const Vec& a, const Vec& b) {
      return space_.compare(a.front(), b.front()) > 0;
    });
    result_.basis = std::move(basis);
  }

  const ModuleSpace& space_;
  GroebnerOptions options_;
  std::vector<Vec> inputs_;
  std::vector<Element> elements_;
  std::set<Pending, std::function<bool(const Pending&, const Pending&)>> queue_;
  GroebnerResult result_;
};

}  // namespace

GroebnerResult groebner_basis(const ModuleSpace& space, std::vector<Vec> inputs,
                              const GroebnerOptions& options) {
  if (!space.ring) throw DomainError("module space without a ring");
  for (const auto& f : inputs) {
    for (const auto& t : f) {
      if (t.comp >= space.rank()) throw DomainError("component out of range");
      if (t.mono.size() != space.ring->nvars()) {
        throw RingMismatch("monomial width does not match the ring");
      }
    }
  }
  return Buchberger(space, options).run(std::move(inputs));
}

Vec reduce(const ModuleSpace& space, Vec f, std::span<const Vec> basis) {
  Buchberger engine(space, {});
  engine.seed(basis);
  return engine.reduce(space.normalize(std::move(f)));
}

}  // namespace arithdeg
