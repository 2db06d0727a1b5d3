#ifndef ARITHDEG_REPORT_HPP
#define ARITHDEG_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "arithdeg/arith_degree.hpp"
#include "arithdeg/hilbert.hpp"
#include "arithdeg/ideal.hpp"
#include "arithdeg/monomial_ideal.hpp"

namespace arithdeg {

using Json = nlohmann::ordered_json;

enum class Verdict { holds, equality_holds, strict_inequality, hypothesis_violated, falsified };

std::string verdict_name(Verdict verdict);
/// 0 for holds and both inequality outcomes, 1 for falsified, 3 for a
/// violated hypothesis.
int exit_code(Verdict verdict);
/// The most severe of two verdicts (falsified > hypothesis-violated > rest).
Verdict worst(Verdict a, Verdict b);

/// Outcome of one mechanical check. Falsified and hypothesis-violated
/// reports carry a witness from which the instance can be rebuilt.
struct CheckReport {
  std::string check;
  std::string instance;
  Json values = Json::object();
  Verdict verdict = Verdict::holds;
  Json witness;
  std::optional<std::uint64_t> seed;
};

/// Ring, generators, forms and seed of an instance.
Json instance_witness(const Ideal& ideal, std::span<const Poly> forms = {},
                      std::optional<std::uint64_t> seed = std::nullopt);
std::string describe_instance(const Ideal& ideal, std::span<const Poly> forms = {});

Json to_json(const CheckReport& report);
std::string render_text(const CheckReport& report);
/// Indented key: value listing of a JSON document, for text output.
std::string render_json_text(const Json& document);

Json to_json(const ArithProfile& profile);
Json to_json(const HilbertPolyData& data);
Json to_json(const Decomposition& decomposition, const PolyRing& ring);
Json to_json(const VerifiedDecomposition& verified, const PolyRing& ring);
Json poly_list(std::span<const Poly> polys);
Json big(const mpz_class& value);

}  // namespace arithdeg

#endif  // ARITHDEG_REPORT_HPP
