#include "arithdeg/univariate.hpp"

#include <algorithm>

#include "arithdeg/error.hpp"

namespace arithdeg {

UPoly::UPoly(std::vector<mpq_class> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void UPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UPoly UPoly::constant(const mpq_class& c) { return UPoly({c}); }

UPoly UPoly::monomial(unsigned k, const mpq_class& c) {
  std::vector<mpq_class> coeffs(k + 1, 0);
  coeffs[k] = c;
  return UPoly(std::move(coeffs));
}

UPoly UPoly::shifted_variable(const mpq_class& a) { return UPoly({a, 1}); }

mpq_class UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

mpq_class UPoly::leading_coeff() const {
  return coeffs_.empty() ? mpq_class(0) : coeffs_.back();
}

bool UPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpq_class& c) { return c.get_den() == 1; });
}

mpq_class UPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::operator-() const { return scaled(-1); }

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

UPoly UPoly::scaled(const mpq_class& c) const {
  std::vector<mpq_class> out = coeffs_;
  for (auto& x : out) x *= c;
  return UPoly(std::move(out));
}

UPoly UPoly::compose_shift(const mpq_class& a) const {
  const UPoly linear = shifted_variable(a);
  UPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * linear + constant(*it);
  }
  return acc;
}

int UPoly::multiplicity_at_one() const {
  if (is_zero()) throw DomainError("the zero polynomial vanishes to every order");
  int k = 0;
  UPoly p = *this;
  while (sgn(p(1)) == 0) {
    p = p.divide_one_minus_x(1);
    ++k;
  }
  return k;
}

UPoly UPoly::divide_one_minus_x(int k) const {
  UPoly p = *this;
  for (int step = 0; step < k; ++step) {
    if (p.is_zero()) return p;
    // p = (1 - x) q  <=>  q_0 = p_0, q_i = p_i + q_{i-1}.
    std::vector<mpq_class> q(p.coeffs_.size() - 1, 0);
    mpq_class running = 0;
    for (std::size_t i = 0; i + 1 < p.coeffs_.size(); ++i) {
      running += p.coeffs_[i];
      q[i] = running;
    }
    if (sgn(running + p.coeffs_.back()) != 0) {
      throw DomainError("polynomial is not divisible by (1 - x)");
    }
    p = UPoly(std::move(q));
  }
  return p;
}

std::string UPoly::render(std::string_view variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const mpq_class magnitude = negative ? mpq_class(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power;
    if (k >= 1) power = std::string(variable);
    if (k >= 2) power += "^" + std::to_string(k);
    if (power.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += power;
    } else {
      out += magnitude.get_str() + "*" + power;
    }
  }
  return out;
}

UPoly binomial_polynomial(const mpq_class& a, unsigned m) {
  UPoly acc = UPoly::constant(1);
  mpz_class factorial = 1;
  for (unsigned i = 0; i < m; ++i) {
    acc = acc * UPoly::shifted_variable(a - i);
    factorial *= i + 1;
  }
  return acc.scaled(mpq_class(1, 1) / mpq_class(factorial));
}

mpz_class binomial(long top, unsigned long m) {
  if (top < 0 || static_cast<unsigned long>(top) < m) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), m);
  return out;
}

}  // namespace arithdeg
