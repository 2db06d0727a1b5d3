#include "arithdeg/term_order.hpp"

#include "arithdeg/error.hpp"

namespace arithdeg {

namespace {

std::int64_t partial_degree(const Monomial& m, std::size_t begin,
                            std::size_t end) {
  std::int64_t d = 0;
  for (std::size_t i = begin; i < end; ++i) d += m[i];
  return d;
}

std::strong_ordering lex_range(const Monomial& a, const Monomial& b,
                               std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

const char* kind_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::lex:
      return "lex";
    case OrderKind::grlex:
      return "grlex";
  }
  return "?";
}

}  // namespace

std::strong_ordering compare_with(OrderKind kind, const Monomial& a,
                                  const Monomial& b, std::size_t begin,
                                  std::size_t end) {
  if (kind == OrderKind::lex) return lex_range(a, b, begin, end);
  const std::int64_t da = partial_degree(a, begin, end);
  const std::int64_t db = partial_degree(b, begin, end);
  if (da != db) return da <=> db;
  if (kind == OrderKind::grlex) return lex_range(a, b, begin, end);
  // grevlex: the smaller exponent in the last differing variable wins.
  for (std::size_t i = end; i > begin; --i) {
    if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
  }
  return std::strong_ordering::equal;
}

TermOrder TermOrder::block(std::size_t eliminated, OrderKind inner) {
  TermOrder order(inner);
  order.block_size_ = eliminated;
  return order;
}

TermOrder TermOrder::parse(std::string_view name) {
  if (name == "grevlex") return grevlex();
  if (name == "lex") return lex();
  if (name == "grlex") return grlex();
  throw DomainError("unknown term order '" + std::string(name) + "'");
}

std::strong_ordering TermOrder::compare(const Monomial& a,
                                        const Monomial& b) const {
  const std::size_t n = a.size();
  if (block_size_ == 0) {
    if (kind_ == OrderKind::grevlex && a.degree() != b.degree()) {
      return a.degree() <=> b.degree();
    }
    return compare_with(kind_, a, b, 0, n);
  }
  const std::size_t split = block_size_ < n ? block_size_ : n;
  if (auto c = compare_with(OrderKind::grevlex, a, b, 0, split); c != 0) {
    return c;
  }
  return compare_with(kind_, a, b, split, n);
}

std::string TermOrder::name() const {
  if (block_size_ == 0) return kind_name(kind_);
  return "block(" + std::to_string(block_size_) + "," + kind_name(kind_) + ")";
}

}  // namespace arithdeg
