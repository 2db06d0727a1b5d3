#include "arithdeg_cli/ideal_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <arithdeg/error.hpp>
#include <arithdeg/parse.hpp>

namespace arithdeg::cli {

namespace {

struct Line {
  std::size_t number;
  std::size_t column;  // 0-based offset of `text` in the raw line
  std::string text;
};

struct PendingComponent {
  Line generators;
  std::optional<Line> prime;
};

struct PendingCertificate {
  Line header;
  std::string name;
  std::optional<Line> source;
  std::vector<PendingComponent> components;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) {
    offset += s.size();
    return {};
  }
  const auto end = s.find_last_not_of(" \t\r");
  offset += begin;
  return s.substr(begin, end - begin + 1);
}

bool starts_with_word(std::string_view s, std::string_view word) {
  if (s.substr(0, word.size()) != word) return false;
  return s.size() == word.size() || s[word.size()] == ' ' || s[word.size()] == '\t' ||
         s[word.size()] == ':';
}

[[noreturn]] void fail(const Line& line, std::size_t at, const std::string& what) {
  throw ParseError(what, line.number, line.column + at + 1);
}

// Text after "keyword ... :" on the same line.
Line after_colon(const Line& line) {
  const auto colon = line.text.find(':');
  if (colon == std::string::npos) fail(line, line.text.size(), "expected ':'");
  std::size_t offset = line.column + colon + 1;
  const std::string_view rest = trim(std::string_view(line.text).substr(colon + 1), offset);
  return {line.number, offset, std::string(rest)};
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t word_offset(std::string_view s, std::size_t index) {
  std::size_t pos = 0;
  for (std::size_t k = 0;; ++k) {
    pos = s.find_first_not_of(" \t", pos);
    if (k == index || pos == std::string_view::npos) return pos;
    pos = s.find_first_of(" \t", pos);
  }
}

}  // namespace

std::optional<Poly> IdealFile::form(std::string_view name) const {
  for (const auto& [n, f] : forms) {
    if (n == name) return f;
  }
  return std::nullopt;
}

Field parse_field(std::string_view text) {
  if (text == "Q" || text == "q" || text == "QQ") return Field::rationals();
  std::string_view digits;
  if (text.starts_with("GF(") && text.ends_with(")")) {
    digits = text.substr(3, text.size() - 4);
  } else if (text.starts_with("gf:")) {
    digits = text.substr(3);
  } else {
    throw DomainError("unknown field '" + std::string(text) + "'; use Q or GF(p)");
  }
  if (digits.empty() || digits.size() > 10 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("malformed characteristic in '" + std::string(text) + "'");
  }
  const unsigned long long p = std::stoull(std::string(digits));
  if (p >= (1ull << 31)) throw DomainError("GF(p) requires p < 2^31");
  return Field::prime(static_cast<std::uint32_t>(p));
}

IdealFile parse_ideal_text(std::string_view text, const RingOverrides& overrides) {
  std::optional<Line> ring_line;
  std::optional<Line> order_line;
  std::optional<Line> gens_header;
  std::vector<Line> gens;
  std::vector<Line> form_lines;
  std::vector<PendingCertificate> certs;
  enum class Block { none, gens, certificate } block = Block::none;

  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t offset = 0;
    const std::string_view body = trim(raw, offset);
    if (body.empty()) continue;
    const Line line{number, offset, std::string(body)};

    if (starts_with_word(body, "ring")) {
      if (ring_line) fail(line, 0, "duplicate ring header");
      ring_line = line;
      block = Block::none;
    } else if (starts_with_word(body, "order")) {
      if (order_line) fail(line, 0, "duplicate order line");
      order_line = line;
      block = Block::none;
    } else if (starts_with_word(body, "gens")) {
      if (gens_header) fail(line, 0, "duplicate gens block");
      gens_header = line;
      const Line rest = after_colon(line);
      if (!rest.text.empty()) gens.push_back(rest);
      block = Block::gens;
    } else if (starts_with_word(body, "form")) {
      form_lines.push_back(line);
      block = Block::none;
    } else if (starts_with_word(body, "certificate")) {
      const auto colon = body.find(':');
      if (colon == std::string_view::npos) fail(line, body.size(), "expected ':'");
      std::size_t name_offset = 0;
      const std::string name(trim(body.substr(11, colon - 11), name_offset));
      certs.push_back({line, name.empty() ? "certificate" + std::to_string(certs.size() + 1) : name,
                       std::nullopt, {}});
      block = Block::certificate;
    } else if (block == Block::certificate && starts_with_word(body, "source")) {
      if (certs.back().source) fail(line, 0, "duplicate source line");
      certs.back().source = after_colon(line);
    } else if (block == Block::certificate && starts_with_word(body, "component")) {
      certs.back().components.push_back({after_colon(line), std::nullopt});
    } else if (block == Block::certificate && starts_with_word(body, "prime")) {
      if (certs.back().components.empty() || certs.back().components.back().prime) {
        fail(line, 0, "prime line without a preceding component line");
      }
      certs.back().components.back().prime = after_colon(line);
    } else if (block == Block::gens) {
      gens.push_back(line);
    } else {
      fail(line, 0, "unexpected line outside any block");
    }
  }

  if (!ring_line) throw ParseError("missing ring header", 1, 1);
  const auto ring_words = words(ring_line->text);
  if (ring_words.size() < 3) fail(*ring_line, ring_line->text.size(), "ring header needs a field and variables");
  Field field = Field::rationals();
  try {
    field = parse_field(ring_words[1]);
  } catch (const DomainError& e) {
    fail(*ring_line, word_offset(ring_line->text, 1), e.what());
  }
  TermOrder order = TermOrder::grevlex();
  if (order_line) {
    const auto w = words(order_line->text);
    if (w.size() != 2) fail(*order_line, 0, "order line needs exactly one name");
    try {
      order = TermOrder::parse(w[1]);
    } catch (const DomainError& e) {
      fail(*order_line, word_offset(order_line->text, 1), e.what());
    }
  }
  if (overrides.field) field = *overrides.field;
  if (overrides.order) order = *overrides.order;
  std::vector<std::string> names(ring_words.begin() + 2, ring_words.end());
  for (std::size_t k = 0; k < names.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (names[j] == names[k]) {
        fail(*ring_line, word_offset(ring_line->text, k + 2), "duplicate variable name '" + names[k] + "'");
      }
    }
  }
  IdealFile file;
  try {
    file.ring = PolyRing::make(field, names, order);
  } catch (const DomainError& e) {
    fail(*ring_line, 0, e.what());
  }
  const RingPtr& ring = file.ring;

  auto poly_list = [&](const Line& l) { return parse_poly_list(l.text, ring, l.number, l.column); };
  auto check_form = [&](const Line& l, const Poly& f) {
    if (!f.is_homogeneous()) fail(l, 0, "polynomial is not homogeneous");
  };

  if (!gens_header) throw ParseError("missing gens block", ring_line->number, 1);
  for (const auto& l : gens) {
    // A generator line may hold several comma-separated polynomials.
    for (auto& f : poly_list(l)) {
      check_form(l, f);
      file.generators.push_back(std::move(f));
    }
  }

  for (const auto& l : form_lines) {
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) fail(l, l.text.size(), "expected ':' after the form name");
    std::size_t name_offset = 0;
    const std::string name(trim(std::string_view(l.text).substr(4, colon - 4), name_offset));
    if (name.empty()) fail(l, 4, "form needs a name");
    if (file.form(name)) fail(l, 4 + name_offset, "duplicate form name '" + name + "'");
    const Line rest = after_colon(l);
    Poly f = parse_poly(rest.text, ring, rest.number, rest.column);
    check_form(rest, f);
    file.forms.emplace_back(name, std::move(f));
  }

  for (const auto& pc : certs) {
    DecompositionCertificate cert;
    cert.name = pc.name;
    cert.provenance = "line " + std::to_string(pc.header.number);
    cert.source = pc.source ? poly_list(*pc.source) : file.generators;
    if (pc.components.empty()) fail(pc.header, 0, "certificate has no components");
    for (const auto& comp : pc.components) {
      if (!comp.prime) fail(comp.generators, 0, "component without a prime line");
      CertificateComponent c;
      c.generators = poly_list(comp.generators);
      for (const auto& g : c.generators) check_form(comp.generators, g);
      const auto vars = words(comp.prime->text);
      for (std::size_t k = 0; k < vars.size(); ++k) {
        std::string v = vars[k];
        if (!v.empty() && v.back() == ',') v.pop_back();
        const auto index = ring->variable_index(v);
        if (!index) {
          fail(*comp.prime, word_offset(comp.prime->text, k), "unknown variable '" + v + "'");
        }
        c.prime.push_back(*index);
      }
      std::sort(c.prime.begin(), c.prime.end());
      c.prime.erase(std::unique(c.prime.begin(), c.prime.end()), c.prime.end());
      cert.components.push_back(std::move(c));
    }
    file.certificates.push_back(std::move(cert));
  }
  return file;
}

IdealFile parse_ideal_file(const std::string& path, const RingOverrides& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ideal_text(buffer.str(), overrides);
}

std::string render_ideal_file(const IdealFile& file) {
  std::ostringstream out;
  const PolyRing& ring = *file.ring;
  out << "ring " << ring.field().name();
  for (const auto& v : ring.variable_names()) out << ' ' << v;
  out << "\norder " << ring.order().name() << "\ngens:\n";
  for (const auto& g : file.generators) out << g.render() << '\n';
  for (const auto& [name, f] : file.forms) out << "form " << name << ": " << f.render() << '\n';
  auto list = [](const std::vector<Poly>& ps) {
    std::string s;
    for (std::size_t k = 0; k < ps.size(); ++k) s += (k ? ", " : "") + ps[k].render();
    return s;
  };
  for (const auto& cert : file.certificates) {
    out << "certificate " << cert.name << ":\n";
    out << "source: " << list(cert.source) << '\n';
    for (const auto& c : cert.components) {
      out << "component: " << list(c.generators) << '\n';
      out << "prime:";
      for (auto v : c.prime) out << ' ' << ring.variable_name(v);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace arithdeg::cli
