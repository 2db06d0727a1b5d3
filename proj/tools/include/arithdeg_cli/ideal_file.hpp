#ifndef ARITHDEG_CLI_IDEAL_FILE_HPP
#define ARITHDEG_CLI_IDEAL_FILE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <arithdeg/arith_degree.hpp>
#include <arithdeg/ideal.hpp>

namespace arithdeg::cli {

/// Parsed contents of an ideal file:
///
///   # comment
///   ring Q x0 x1 x2          (or GF(p))
///   order grevlex            (optional; grevlex, lex or grlex)
///   gens:
///   x0^2*x1
///   x1^2*x2
///   form F: x3               (optional, repeatable)
///   certificate name:        (optional, repeatable)
///   source: f1, f2, ...      (optional; defaults to the generators)
///   component: q1, q2, ...
///   prime: x0 x2
struct IdealFile {
  RingPtr ring;
  std::vector<Poly> generators;
  std::vector<DecompositionCertificate> certificates;
  std::vector<std::pair<std::string, Poly>> forms;

  Ideal ideal() const { return Ideal(ring, generators); }
  /// Named form, or nullopt.
  std::optional<Poly> form(std::string_view name) const;
};

/// Command-line replacements for the header's field and order.
struct RingOverrides {
  std::optional<Field> field;
  std::optional<TermOrder> order;
};

/// "Q"/"q" or "GF(p)"/"gf:p"; throws DomainError otherwise.
Field parse_field(std::string_view text);

/// Errors are ParseError with 1-based line and column.
IdealFile parse_ideal_text(std::string_view text, const RingOverrides& overrides = {});
IdealFile parse_ideal_file(const std::string& path, const RingOverrides& overrides = {});

/// Inverse of parse_ideal_text up to comments and whitespace.
std::string render_ideal_file(const IdealFile& file);

}  // namespace arithdeg::cli

#endif  // ARITHDEG_CLI_IDEAL_FILE_HPP
