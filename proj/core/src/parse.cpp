#include "arithdeg/parse.hpp"

#include <cctype>
#include <limits>

#include "arithdeg/error.hpp"

namespace arithdeg {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring, std::size_t line,
             std::size_t column_offset)
      : text_(text), ring_(ring), line_(line), offset_(column_offset) {}

  Poly parse_expression() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_space();
    }
    terms.push_back(parse_term(negative));
    for (skip_space(); !at_end(); skip_space()) {
      const char op = peek();
      if (op != '+' && op != '-') {
        if (op == '/') fail("division is not allowed in polynomial input");
        fail(std::string("unexpected character '") + op + "'");
      }
      get();
      skip_space();
      terms.push_back(parse_term(op == '-'));
    }
    return Poly::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    const Field& field = ring_->field();
    Coeff coeff = field.one();
    Monomial mono = ring_->one();
    bool have_factor = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      have_factor = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        get();
        skip_space();
        mono = parse_power();
      } else if (!at_end() && is_ident_start(peek())) {
        mono = parse_power();
      } else {
        return finish(coeff, mono, negative);
      }
    } else {
      mono = parse_power();
    }
    have_factor = true;
    for (skip_space(); !at_end() && peek() == '*'; skip_space()) {
      get();
      skip_space();
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = field.mul(coeff, parse_coefficient());
      } else {
        mono = mono * parse_power();
      }
    }
    if (!have_factor) fail("expected a term");
    return finish(coeff, mono, negative);
  }

  Term finish(Coeff coeff, Monomial mono, bool negative) {
    if (negative) coeff = ring_->field().neg(coeff);
    return {std::move(mono), std::move(coeff)};
  }

  Coeff parse_coefficient() {
    const std::size_t start = pos_;
    mpz_class num = parse_integer();
    skip_space();
    if (!at_end() && peek() == '/') {
      get();
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("division is not allowed in polynomial input");
      }
      mpz_class den = parse_integer();
      if (den == 0) fail_at(start, "zero denominator");
      try {
        return ring_->field().from_fraction(num, den);
      } catch (const DomainError& e) {
        fail_at(start, std::string("characteristic mismatch: ") + e.what());
      }
    }
    return ring_->field().from_integer(num);
  }

  mpz_class parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Monomial parse_power() {
    if (at_end() || !is_ident_start(peek())) fail("expected a variable");
    const std::size_t start = pos_;
    while (!at_end() && is_ident_char(peek())) get();
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto index = ring_->variable_index(name);
    if (!index) fail_at(start, "unknown variable '" + std::string(name) + "'");
    Exponent e = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      get();
      skip_space();
      const std::size_t exp_start = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("malformed exponent");
      }
      mpz_class value = parse_integer();
      if (value > std::numeric_limits<Exponent>::max()) {
        fail_at(exp_start, "exponent exceeds 32 bits");
      }
      e = static_cast<Exponent>(value.get_ui());
    }
    return Monomial::variable(ring_->nvars(), *index, e);
  }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw ParseError(what, line_, offset_ + pos + 1);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring, std::size_t line,
                std::size_t column_offset) {
  return PolyParser(text, ring, line, column_offset).parse_expression();
}

std::vector<Poly> parse_poly_list(std::string_view text, const RingPtr& ring,
                                  std::size_t line, std::size_t column_offset) {
  std::vector<Poly> out;
  std::size_t start = 0;
  const bool blank = text.find_first_not_of(" \t\r\n") == std::string_view::npos;
  if (blank) return out;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                           : comma - start);
    out.push_back(parse_poly(piece, ring, line, column_offset + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace arithdeg
