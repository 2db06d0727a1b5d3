#include "arithdeg/report.hpp"

#include <sstream>

namespace arithdeg {

namespace {

int severity(Verdict v) {
  switch (v) {
    case Verdict::falsified:
      return 2;
    case Verdict::hypothesis_violated:
      return 1;
    default:
      return 0;
  }
}

void render_value(std::ostringstream& out, const std::string& key, const Json& value,
                  int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) render_value(out, k, v, indent + 2);
  } else if (value.is_array() && !value.empty() && value.front().is_object()) {
    out << pad << key << ":\n";
    for (std::size_t i = 0; i < value.size(); ++i) {
      render_value(out, "[" + std::to_string(i) + "]", value[i], indent + 2);
    }
  } else {
    out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
}

}  // namespace

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds:
      return "holds";
    case Verdict::equality_holds:
      return "equality-holds";
    case Verdict::strict_inequality:
      return "strict-inequality";
    case Verdict::hypothesis_violated:
      return "hypothesis-violated";
    case Verdict::falsified:
      return "falsified";
  }
  return "unknown";
}

int exit_code(Verdict verdict) {
  switch (verdict) {
    case Verdict::falsified:
      return 1;
    case Verdict::hypothesis_violated:
      return 3;
    default:
      return 0;
  }
}

Verdict worst(Verdict a, Verdict b) { return severity(b) > severity(a) ? b : a; }

Json poly_list(std::span<const Poly> polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.render());
  return out;
}

Json big(const mpz_class& value) {
  if (value.fits_slong_p()) return Json(value.get_si());
  return Json(value.get_str());
}

Json instance_witness(const Ideal& ideal, std::span<const Poly> forms,
                      std::optional<std::uint64_t> seed) {
  Json w;
  w["ring"] = ideal.ring()->describe();
  w["generators"] = poly_list(ideal.generators());
  w["forms"] = poly_list(forms);
  w["seed"] = seed ? Json(*seed) : Json(nullptr);
  return w;
}

std::string describe_instance(const Ideal& ideal, std::span<const Poly> forms) {
  std::string out = ideal.ring()->describe() + " I = " + ideal.render();
  if (!forms.empty()) {
    out += " F = ";
    for (std::size_t k = 0; k < forms.size(); ++k) {
      if (k) out += ", ";
      out += forms[k].render();
    }
  }
  return out;
}

Json to_json(const CheckReport& report) {
  Json out;
  out["check"] = report.check;
  out["instance"] = report.instance;
  out["values"] = report.values;
  out["verdict"] = verdict_name(report.verdict);
  out["witness"] = report.witness;
  out["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  return out;
}

std::string render_text(const CheckReport& report) {
  std::ostringstream out;
  out << "check:    " << report.check << "\n";
  out << "instance: " << report.instance << "\n";
  if (report.seed) out << "seed:     " << *report.seed << "\n";
  for (const auto& [k, v] : report.values.items()) render_value(out, k, v, 2);
  out << "verdict:  " << verdict_name(report.verdict) << "\n";
  if (!report.witness.is_null()) out << "witness:  " << report.witness.dump() << "\n";
  return out.str();
}

std::string render_json_text(const Json& document) {
  std::ostringstream out;
  if (document.is_object()) {
    for (const auto& [k, v] : document.items()) render_value(out, k, v, 0);
  } else {
    render_value(out, "value", document, 0);
  }
  return out.str();
}

Json to_json(const ArithProfile& profile) {
  Json out = Json::array();
  for (const auto& e : profile.entries) {
    Json routes = Json::array();
    for (auto r : e.routes) routes.push_back(route_name(r));
    out.push_back({{"r", e.r}, {"arith_deg", e.value}, {"routes", routes}});
  }
  return out;
}

Json to_json(const HilbertPolyData& data) {
  return {{"polynomial", data.polynomial.render("l")},
          {"hdim", data.hdim},
          {"degree", big(data.degree)},
          {"postulation", data.postulation}};
}

Json to_json(const Decomposition& decomposition, const PolyRing& ring) {
  Json comps = Json::array();
  for (const auto& c : decomposition.components) {
    comps.push_back({{"component", c.ideal.render(ring)},
                     {"prime", render_variables(ring, c.prime)},
                     {"hdim", c.hdim},
                     {"degree", c.degree},
                     {"multiplicity", length_multiplicity(decomposition.source, c.prime)}});
  }
  return {{"source", decomposition.source.render(ring)}, {"components", comps}};
}

Json to_json(const VerifiedDecomposition& verified, const PolyRing& ring) {
  Json comps = Json::array();
  for (const auto& c : verified.components) {
    comps.push_back({{"prime", render_variables(ring, c.prime)},
                     {"hdim", c.hdim},
                     {"random_primary_check", c.random_primary},
                     {"exact_primary_check", c.exact_primary}});
  }
  Json warnings = Json::array();
  for (const auto& w : verified.warnings) warnings.push_back(w);
  return {{"status", status_name(verified.status)}, {"components", comps}, {"warnings", warnings}};
}

}  // namespace arithdeg
