#ifndef ARITHDEG_TERM_ORDER_HPP
#define ARITHDEG_TERM_ORDER_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "arithdeg/monomial.hpp"

namespace arithdeg {

enum class OrderKind { grevlex, lex, grlex };

/// A monomial order. Block orders compare the first `block_size` variables
/// by grevlex and break ties with `inner` on the remaining variables, which
/// makes the leading block eliminable.
class TermOrder {
 public:
  constexpr TermOrder() = default;

  static constexpr TermOrder grevlex() { return TermOrder(OrderKind::grevlex); }
  static constexpr TermOrder lex() { return TermOrder(OrderKind::lex); }
  static constexpr TermOrder grlex() { return TermOrder(OrderKind::grlex); }
  static TermOrder block(std::size_t eliminated, OrderKind inner);

  /// Accepts "grevlex", "lex", "grlex". Throws DomainError otherwise.
  static TermOrder parse(std::string_view name);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t block_size() const noexcept { return block_size_; }
  bool is_block() const noexcept { return block_size_ > 0; }
  /// Degree-compatible on the whole monomial (block orders are not).
  bool is_graded() const noexcept {
    return !is_block() && kind_ != OrderKind::lex;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::string name() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  constexpr explicit TermOrder(OrderKind kind) : kind_(kind) {}

  OrderKind kind_ = OrderKind::grevlex;
  std::size_t block_size_ = 0;
};

std::strong_ordering compare_with(OrderKind kind, const Monomial& a,
                                  const Monomial& b, std::size_t begin,
                                  std::size_t end);

}  // namespace arithdeg

#endif  // ARITHDEG_TERM_ORDER_HPP
