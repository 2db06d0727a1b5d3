#include "arithdeg/poly.hpp"

#include <algorithm>
#include <utility>

#include "arithdeg/error.hpp"

namespace arithdeg {

namespace {

void require_same_ring(const Poly& a, const Poly& b, const char* what) {
  if (!same_ring(a.ring(), b.ring())) {
    throw RingMismatch(std::string(what) + ": operands live in different rings");
  }
}

// Merges two canonical term lists, scaling the second by `factor`.
std::vector<Term> merge_terms(const PolyRing& ring, std::span<const Term> a,
                              std::span<const Term> b, const Coeff& factor) {
  const Field& field = ring.field();
  const TermOrder& order = ring.order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, field.mul(factor, b[j].coeff)});
      ++j;
    } else {
      Coeff sum = field.add(a[i].coeff, field.mul(factor, b[j].coeff));
      if (!Field::is_zero(sum)) out.push_back({a[i].mono, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, field.mul(factor, b[j].coeff)});
  return out;
}

std::string render_coeff(const Coeff& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("polynomial without a ring");
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const TermOrder& order = ring->order();
  const Field& field = ring->field();
  for (auto& t : terms) {
    if (t.mono.size() != ring->nvars()) {
      throw RingMismatch("monomial width does not match the ring");
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
    if (Field::is_zero(out.back().coeff)) out.pop_back();
  }
  return Poly(std::move(ring), std::move(out));
}

Poly Poly::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  return Poly(std::move(ring), std::move(terms));
}

Poly Poly::constant(RingPtr ring, const Coeff& c) {
  Poly p(ring);
  Coeff value = ring->field().is_rational() ? c : ring->field().from_fraction(c.get_num(), c.get_den());
  if (!Field::is_zero(value)) p.terms_.push_back({ring->one(), value});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  const std::size_t n = ring->nvars();
  return Poly(std::move(ring), {Term{Monomial::variable(n, index), Coeff(1)}});
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Coeff& c) {
  return from_terms(std::move(ring), {Term{m, c}});
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw DomainError("the zero polynomial has no leading term");
  return terms_.front();
}

std::int64_t Poly::total_degree() const noexcept {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::optional<FormDegree> Poly::homogeneity() const {
  if (terms_.empty()) return FormDegree{};
  const std::int64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_) {
    if (t.mono.degree() != d) return std::nullopt;
  }
  return FormDegree{d};
}

Poly Poly::operator-() const { return scaled(Coeff(-1)); }

Poly operator+(const Poly& a, const Poly& b) {
  require_same_ring(a, b, "add");
  return Poly(a.ring_, merge_terms(*a.ring_, a.terms_, b.terms_, Coeff(1)));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_ring(a, b, "sub");
  return Poly(a.ring_, merge_terms(*a.ring_, a.terms_, b.terms_,
                                   a.ring_->field().neg(Coeff(1))));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b, "mul");
  const Field& field = a.ring_->field();
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      products.push_back({s.mono * t.mono, field.mul(s.coeff, t.coeff)});
    }
  }
  return Poly::from_terms(a.ring_, std::move(products));
}

Poly Poly::scaled(const Coeff& c) const {
  const Field& field = ring_->field();
  const Coeff factor = field.is_rational() ? c : field.from_fraction(c.get_num(), c.get_den());
  if (Field::is_zero(factor)) return Poly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono, field.mul(t.coeff, factor)});
  return Poly(ring_, std::move(out));
}

Poly Poly::times_term(const Monomial& m, const Coeff& c) const {
  const Field& field = ring_->field();
  if (Field::is_zero(c)) return Poly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of the terms.
  for (const auto& t : terms_) out.push_back({t.mono * m, field.mul(t.coeff, c)});
  return Poly(ring_, std::move(out));
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(ring_, Coeff(1));
  Poly base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Poly Poly::substitute(std::size_t index, const Poly& replacement) const {
  require_same_ring(*this, replacement, "substitute");
  if (index >= ring_->nvars()) throw DomainError("variable index out of range");
  std::vector<Poly> powers{constant(ring_, Coeff(1))};
  Poly result(ring_);
  std::vector<Term> untouched;
  for (const auto& t : terms_) {
    const Exponent e = t.mono[index];
    if (e == 0) {
      untouched.push_back(t);
      continue;
    }
    while (powers.size() <= e) powers.push_back(powers.back() * replacement);
    const Monomial rest = t.mono.with_exponent(index, 0);
    result = result + powers[e].times_term(rest, t.coeff);
  }
  return result + from_terms(ring_, std::move(untouched));
}

Poly Poly::in_ring(const RingPtr& target) const {
  if (target->nvars() != ring_->nvars() || !(target->field() == ring_->field())) {
    throw RingMismatch("cannot move a polynomial between incompatible rings");
  }
  if (target->order() == ring_->order()) return Poly(target, terms_);
  return from_terms(target, terms_);
}

std::string Poly::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coeff) < 0;
    const Coeff magnitude = negative ? Coeff(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      const Exponent e = t.mono[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += ring_->variable_name(i);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += render_coeff(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += render_coeff(magnitude) + "*" + factors;
    }
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Poly poly_op(PolyOpKind kind, const Poly& a, const Poly& b) {
  switch (kind) {
    case PolyOpKind::add:
      return a + b;
    case PolyOpKind::sub:
      return a - b;
    case PolyOpKind::mul:
      return a * b;
  }
  throw DomainError("unknown polynomial operation");
}

Poly poly_scale(const Poly& a, const Coeff& c) { return a.scaled(c); }

std::optional<FormDegree> is_homogeneous(const Poly& f) {
  return f.homogeneity();
}

Poly substitute_linear(const Poly& f, std::size_t index,
                       const Poly& replacement) {
  const auto rep = replacement.homogeneity();
  if (!rep || (rep->degree && *rep->degree > 1)) {
    throw DomainError("replacement must be a form of degree 0 or 1");
  }
  const bool constant_rep = rep->degree && *rep->degree == 0;
  if (constant_rep && f.is_homogeneous() && index < f.ring()->nvars()) {
    const bool involves = std::any_of(
        f.terms().begin(), f.terms().end(),
        [&](const Term& t) { return t.mono[index] != 0; });
    if (involves) {
      throw DomainError(
          "constant replacement would make a homogeneous polynomial "
          "inhomogeneous");
    }
  }
  return f.substitute(index, replacement);
}

Poly divide_exact(const Poly& f, const Poly& g) {
  require_same_ring(f, g, "divide");
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const RingPtr& ring = f.ring();
  const Field& field = ring->field();
  const Term& lead = g.leading_term();
  Poly remainder = f;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& t = remainder.leading_term();
    if (!lead.mono.divides(t.mono)) {
      throw DomainError("polynomial division is not exact");
    }
    Term q{t.mono / lead.mono, field.div(t.coeff, lead.coeff)};
    remainder = remainder - g.times_term(q.mono, q.coeff);
    quotient.push_back(std::move(q));
  }
  return Poly::from_terms(ring, std::move(quotient));
}

}  // namespace arithdeg
