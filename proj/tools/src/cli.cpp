#include "arithdeg_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <arithdeg/arith_degree.hpp>
#include <arithdeg/error.hpp>
#include <arithdeg/hilbert.hpp>
#include <arithdeg/parse.hpp>
#include <arithdeg/report.hpp>
#include <arithdeg/resolution.hpp>
#include <arithdeg/theorems.hpp>

#include "arithdeg_cli/ideal_file.hpp"

namespace arithdeg::cli {

namespace {

struct Globals {
  bool json = false;
  std::string field;
  std::string order;
  unsigned threads = 1;
};

RingOverrides overrides_of(const Globals& g) {
  RingOverrides o;
  if (!g.field.empty()) o.field = parse_field(g.field);
  if (!g.order.empty()) o.order = TermOrder::parse(g.order);
  return o;
}

Json header(const std::string& command, const Ideal& ideal) {
  Json doc;
  doc["command"] = command;
  doc["ring"] = ideal.ring()->describe();
  doc["generators"] = poly_list(ideal.generators());
  return doc;
}

Poly resolve_form(const IdealFile& file, const std::string& text) {
  if (auto named = file.form(text)) return *named;
  return parse_poly(text, file.ring);
}

std::string profile_table(const Json& doc) {
  std::ostringstream out;
  out << "ring:       " << doc["ring"].get<std::string>() << "\n";
  out << "generators:";
  for (const auto& g : doc["generators"]) out << " " << g.get<std::string>();
  out << "\n";
  out << std::setw(4) << "r" << "  " << std::setw(10) << "arith-deg" << "  routes\n";
  for (const auto& e : doc["profile"]) {
    std::string routes;
    for (const auto& r : e["routes"]) routes += (routes.empty() ? "" : ",") + r.get<std::string>();
    out << std::setw(4) << e["r"].get<int>() << "  " << std::setw(10)
        << e["arith_deg"].get<std::int64_t>() << "  [" << routes << "]\n";
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic degree, dimension filtration and regularity of homogeneous ideals",
               "arithdeg"};
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--field", g.field, "Override the coefficient field: q or gf:<p>");
  app.add_option("--order", g.order, "Override the term order: grevlex, lex or grlex");
  app.add_option("--threads", g.threads, "Worker threads for independent checks")
      ->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  std::string path;
  auto file_command = [&](const std::string& name, const std::string& about) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->fallthrough();
    sub->add_option("file", path, "Ideal file")->required();
    return sub;
  };

  CLI::App* gb = file_command("gb", "Reduced Groebner basis");
  CLI::App* hilbert = file_command("hilbert", "Hilbert series, function and polynomial of S/I");
  int hilbert_to = 10;
  hilbert->add_option("--to", hilbert_to, "Last degree of the listed Hilbert function");
  CLI::App* decompose = file_command("decompose", "Primary decomposition of a monomial ideal");
  CLI::App* filtration = file_command("filtration", "Dimension filtration I>=r");
  std::optional<int> level;
  filtration->add_option("--r", level, "Single level r");
  CLI::App* arithdeg = file_command("arithdeg", "Arithmetic degree profile");
  arithdeg->add_option("--r", level, "Single level r");
  CLI::App* regularity = file_command("regularity", "Betti table, regularity and depth");

  CLI::App* check = app.add_subcommand("check", "Mechanical theorem checks");
  check->fallthrough();
  check->require_subcommand(1);
  auto check_command = [&](const std::string& name, const std::string& about) {
    CLI::App* sub = check->add_subcommand(name, about);
    sub->fallthrough();
    sub->add_option("file", path, "Ideal file")->required();
    return sub;
  };
  int r = 0;
  std::vector<std::string> forms;
  CLI::App* thm21 = check_command("thm2.1", "Hypersurface-section inequality");
  thm21->add_option("--F", forms, "Form (polynomial or named form)")->required()->expected(1);
  thm21->add_option("--r", r, "Level r")->required();

  GenericSectionOptions section;
  std::optional<std::uint64_t> second_seed;
  CLI::App* cor24 = check_command("cor2.4", "Generic hyperplane section");
  cor24->add_option("--r", r, "Level r >= 1")->required();
  cor24->add_option("--seed", section.seed, "Random seed");
  cor24->add_option("--second-seed", second_seed, "Independent second seed");
  cor24->add_option("--trials", section.trials, "Random forms per seed")->check(CLI::PositiveNumber);
  cor24->add_option("--coeff-bound", section.coefficient_bound, "Coefficient bound")
      ->check(CLI::PositiveNumber);

  std::optional<int> r_max;
  int span = 4;
  CLI::App* thm31 = check_command("thm3.1", "Regularity bounds");
  thm31->add_option("--rmax", r_max, "Largest level checked (default n)");
  thm31->add_option("--span", span, "Degrees checked past each threshold");

  std::optional<int> t;
  CLI::App* thm41 = check_command("thm4.1", "Bezout-type bound for a sequence of forms");
  thm41->add_option("--F", forms, "Forms F_1 ... F_s")->required();
  thm41->add_option("--r", r, "Level r")->required();
  thm41->add_option("--t", t, "Filtration level t for the simplified criterion");

  CLI::App* verify = file_command("verify-cert", "Verify decomposition certificates");
  std::string cert_name;
  CertificateOptions cert_options;
  verify->add_option("--name", cert_name, "Only this certificate");
  verify->add_option("--random-checks", cert_options.random_checks, "Random colon checks");
  verify->add_option("--seed", cert_options.seed, "Random seed");

  CLI::App* examples = app.add_subcommand("examples", "Reproduce the two worked examples");
  examples->fallthrough();
  std::vector<int> paddings{0, 1, 2};
  examples->add_option("--padding", paddings, "Extra variables for the first example");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const Json& doc, const std::string& text) {
    if (g.json) {
      out << doc.dump(2) << "\n";
    } else {
      out << text;
    }
  };
  auto emit_reports = [&](const std::vector<CheckReport>& reports) {
    Verdict overall = Verdict::holds;
    Json list = Json::array();
    std::string text;
    for (const auto& rep : reports) {
      overall = worst(overall, rep.verdict);
      list.push_back(to_json(rep));
      text += render_text(rep) + (reports.size() > 1 ? "\n" : "");
    }
    emit(reports.size() == 1 ? list[0] : Json{{"reports", list}}, text);
    return exit_code(overall);
  };

  try {
    if (examples->parsed()) {
      std::vector<std::function<CheckReport()>> jobs;
      for (int p : paddings) jobs.emplace_back([p] { return reproduce_example1(p); });
      jobs.emplace_back([] { return reproduce_example2(); });
      return emit_reports(run_jobs(jobs, g.threads));
    }

    const IdealFile file = parse_ideal_file(path, overrides_of(g));
    const Ideal ideal = file.ideal();
    const int n = file.ring->n();

    if (gb->parsed()) {
      Json doc = header("gb", ideal);
      doc["groebner_basis"] = poly_list(ideal.groebner_basis());
      emit(doc, render_json_text(doc));
      return 0;
    }
    if (hilbert->parsed()) {
      Json doc = header("hilbert", ideal);
      const HilbertSeries series = hilbert_series(ideal);
      doc["numerator"] = series.numerator.render("t");
      doc["denominator_exponent"] = series.nvars;
      Json values = Json::array();
      for (const auto& v : series.values(0, hilbert_to)) values.push_back(big(v));
      doc["hilbert_function"] = values;
      doc["hilbert_polynomial"] = to_json(hilbert_polynomial(series));
      emit(doc, render_json_text(doc));
      return 0;
    }
    if (decompose->parsed()) {
      Json doc = header("decompose", ideal);
      doc["decomposition"] = to_json(primary_decomposition(to_monomial_ideal(ideal)), *file.ring);
      emit(doc, render_json_text(doc));
      return 0;
    }
    if (filtration->parsed()) {
      Json doc = header("filtration", ideal);
      ArithDegree engine(ideal);
      Json levels = Json::array();
      const int lo = level ? *level : -1;
      const int hi = level ? *level : n + 1;
      if (lo < -1 || hi > n + 1) throw DomainError("r must lie in [-1, n+1]");
      for (int k = lo; k <= hi; ++k) {
        levels.push_back(
            {{"r", k}, {"generators", poly_list(engine.filtration(k).groebner_basis())}});
      }
      doc["filtration"] = levels;
      emit(doc, render_json_text(doc));
      return 0;
    }
    if (arithdeg->parsed()) {
      Json doc = header("arithdeg", ideal);
      ArithProfile profile = arith_profile(ideal);
      if (level) {
        if (*level < -1) throw DomainError("r must be >= -1");
        ArithProfile one;
        for (const auto& e : profile.entries) {
          if (e.r == *level) one.entries.push_back(e);
        }
        if (one.entries.empty()) one.entries.push_back({*level, 0, {ArithRoute::lemma25}});
        profile = one;
      }
      doc["profile"] = to_json(profile);
      emit(doc, profile_table(doc));
      return 0;
    }
    if (regularity->parsed()) {
      Json doc = header("regularity", ideal);
      const Resolution res = free_resolution(ideal);
      if (!verify_resolution(ideal, res)) throw InternalError("resolution failed its checks");
      doc["betti"] = res.betti.to_json();
      doc["reg_quotient"] = res.betti.regularity();
      doc["m"] = res.betti.regularity() + 1;
      doc["depth"] = res.betti.depth();
      emit(doc, render_json_text(doc) + res.betti.render());
      return 0;
    }
    if (verify->parsed()) {
      Json doc = header("verify-cert", ideal);
      Json list = Json::array();
      std::string text;
      bool found = false;
      for (const auto& cert : file.certificates) {
        if (!cert_name.empty() && cert.name != cert_name) continue;
        found = true;
        VerifiedDecomposition verified;
        try {
          verified = verify_certificate(file.ring, cert, cert_options);
        } catch (const DomainError& e) {
          err << "certificate " << cert.name << " rejected: " << e.what() << "\n";
          return 1;
        }
        Json entry = {{"name", cert.name}, {"source", poly_list(cert.source)}};
        entry["verification"] = to_json(verified, *file.ring);
        if (verified.status == CertificateStatus::verified) {
          entry["profile"] = to_json(certificate_profile(file.ring, cert, verified));
        }
        list.push_back(entry);
      }
      if (!found) throw DomainError("no matching certificate in the file");
      doc["certificates"] = list;
      emit(doc, render_json_text(doc));
      return 0;
    }
    if (thm21->parsed()) {
      return emit_reports({check_hypersurface(ideal, resolve_form(file, forms.at(0)), r)});
    }
    if (cor24->parsed()) {
      if (second_seed) {
        return emit_reports(
            {check_generic_section_seeds(ideal, r, section.seed, *second_seed, section)});
      }
      return emit_reports({check_generic_section(ideal, r, section)});
    }
    if (thm31->parsed()) {
      return emit_reports({check_regularity_bounds(ideal, r_max ? *r_max : n, span)});
    }
    if (thm41->parsed()) {
      std::vector<Poly> fs;
      for (const auto& f : forms) fs.push_back(resolve_form(file, f));
      return emit_reports({check_bezout(ideal, fs, r, t)});
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const RingMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace arithdeg::cli
