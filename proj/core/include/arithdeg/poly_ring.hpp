#ifndef ARITHDEG_POLY_RING_HPP
#define ARITHDEG_POLY_RING_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arithdeg/field.hpp"
#include "arithdeg/term_order.hpp"

namespace arithdeg {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// The standard graded ring S = K[x0, ..., xn]. Rings are shared, immutable
/// and compared structurally.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> variables,
           TermOrder order = TermOrder::grevlex());

  static RingPtr make(Field field, std::vector<std::string> variables,
                      TermOrder order = TermOrder::grevlex());
  /// K[x0..x{count-1}].
  static RingPtr standard(std::size_t count, Field field = Field::rationals(),
                          TermOrder order = TermOrder::grevlex());

  const Field& field() const noexcept { return field_; }
  const TermOrder& order() const noexcept { return order_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  /// The projective dimension n of P^n = Proj S.
  int n() const noexcept { return static_cast<int>(names_.size()) - 1; }

  const std::string& variable_name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& variable_names() const noexcept {
    return names_;
  }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  /// Same variables and field with a different order.
  RingPtr with_order(TermOrder order) const;
  /// Prepends `count` fresh variables (named after `stem`).
  RingPtr with_leading_variables(std::size_t count, std::string_view stem,
                                 TermOrder order) const;

  Monomial one() const { return Monomial(nvars()); }

  std::string describe() const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.order_ == b.order_ && a.names_ == b.names_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  TermOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace arithdeg

#endif  // ARITHDEG_POLY_RING_HPP
