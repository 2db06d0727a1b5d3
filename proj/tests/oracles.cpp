#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace oracle {

namespace {

void extend(std::vector<Monomial>& out, std::vector<arithdeg::Exponent>& exps, std::size_t at,
            std::int64_t left) {
  if (at + 1 == exps.size()) {
    exps[at] = static_cast<arithdeg::Exponent>(left);
    out.emplace_back(std::span<const arithdeg::Exponent>(exps));
    return;
  }
  for (std::int64_t e = left; e >= 0; --e) {
    exps[at] = static_cast<arithdeg::Exponent>(e);
    extend(out, exps, at + 1, left - e);
  }
}

bool divisible(std::span<const Monomial> gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

// Rows of the degree-l Macaulay matrix with columns indexed by `columns`.
std::vector<std::vector<mpq_class>> macaulay_rows(std::span<const Poly> gens, std::int64_t l,
                                                  const std::map<std::vector<arithdeg::Exponent>, std::size_t>& columns) {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : gens) {
    const std::int64_t d = g.total_degree();
    if (d > l) continue;
    for (const auto& shift : monomials_of_degree(g.ring()->nvars(), l - d)) {
      std::vector<mpq_class> row(columns.size());
      for (const auto& t : g.terms()) {
        const Monomial m = t.mono * shift;
        row[columns.at({m.exponents().begin(), m.exponents().end()})] = t.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::map<std::vector<arithdeg::Exponent>, std::size_t> column_index(std::size_t nvars, std::int64_t l) {
  std::map<std::vector<arithdeg::Exponent>, std::size_t> out;
  for (const auto& m : monomials_of_degree(nvars, l)) {
    out.emplace(std::vector<arithdeg::Exponent>(m.exponents().begin(), m.exponents().end()), out.size());
  }
  return out;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::int64_t degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<arithdeg::Exponent> exps(nvars, 0);
  extend(out, exps, 0, degree);
  return out;
}

std::size_t rank(const Field& field, std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  auto reduce = [&](mpq_class v) {
    if (field.is_rational()) return v;
    return field.from_fraction(v.get_num(), v.get_den());
  };
  for (auto& row : rows) {
    for (auto& v : row) v = reduce(v);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const mpq_class factor = field.div(rows[i][c], rows[r][c]);
      for (std::size_t j = c; j < cols; ++j) {
        rows[i][j] = field.sub(rows[i][j], field.mul(factor, rows[r][j]));
      }
    }
    ++r;
  }
  return r;
}

long standard_monomials(std::span<const Monomial> generators, std::size_t nvars, std::int64_t l) {
  long count = 0;
  for (const auto& m : monomials_of_degree(nvars, l)) {
    if (!divisible(generators, m)) ++count;
  }
  return count;
}

long macaulay_hilbert(std::span<const Poly> generators, std::int64_t l) {
  const auto& ring = generators.front().ring();
  const auto columns = column_index(ring->nvars(), l);
  const std::size_t r = rank(ring->field(), macaulay_rows(generators, l, columns));
  return static_cast<long>(columns.size() - r);
}

bool macaulay_member(std::span<const Poly> generators, const Poly& f) {
  if (f.is_zero()) return true;
  const auto& ring = f.ring();
  const std::int64_t l = f.total_degree();
  const auto columns = column_index(ring->nvars(), l);
  auto rows = macaulay_rows(generators, l, columns);
  const std::size_t before = rank(ring->field(), rows);
  std::vector<mpq_class> extra(columns.size());
  for (const auto& t : f.terms()) {
    extra[columns.at({t.mono.exponents().begin(), t.mono.exponents().end()})] = t.coeff;
  }
  rows.push_back(std::move(extra));
  return rank(ring->field(), std::move(rows)) == before;
}

std::vector<Monomial> lcm_intersection(std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<Monomial> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(lcm(x, y));
  }
  return out;
}

bool same_monomial_ideal(std::span<const Monomial> a, std::span<const Monomial> b) {
  return std::all_of(a.begin(), a.end(), [&](const Monomial& m) { return divisible(b, m); }) &&
         std::all_of(b.begin(), b.end(), [&](const Monomial& m) { return divisible(a, m); });
}

std::set<VariableSet> associated_primes(const MonomialIdeal& m) {
  std::set<VariableSet> out;
  const std::size_t n = m.nvars();
  if (m.is_unit()) return out;
  if (m.is_zero()) {
    out.insert({});
    return out;
  }
  std::vector<arithdeg::Exponent> top(n, 0);
  for (const auto& g : m.generators()) {
    for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], g[i]);
  }
  std::vector<arithdeg::Exponent> w(n, 0);
  while (true) {
    const Monomial mono{std::span<const arithdeg::Exponent>(w)};
    if (!divisible(m.generators(), mono)) {
      // Minimal generators of (M : w) among g / gcd(g, w).
      std::vector<Monomial> quotients;
      for (const auto& g : m.generators()) quotients.push_back(g / gcd(g, mono));
      VariableSet vars;
      bool prime = true;
      for (const auto& q : quotients) {
        bool redundant = false;
        for (const auto& other : quotients) {
          if (!(other == q) && other.divides(q)) redundant = true;
        }
        if (redundant) continue;
        if (q.degree() != 1) {
          prime = false;
          break;
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (q[i]) vars.push_back(i);
        }
      }
      if (prime) {
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        out.insert(vars);
      }
    }
    std::size_t i = 0;
    while (i < n && w[i] == top[i]) w[i++] = 0;
    if (i == n) break;
    ++w[i];
  }
  return out;
}

}  // namespace oracle
