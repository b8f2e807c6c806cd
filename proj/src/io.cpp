#include "ldm/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ldm/error.hpp"

namespace ldm {

namespace {

[[noreturn]] void format_error(const std::string& what) { throw Error(Errc::FormatError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) format_error(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) format_error(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty())
    throw Error(Errc::BadParameters, "not an integer: " + s);
  return v;
}

std::string rational_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  mpz_class num, den = 1;
  try {
    num = mpz_class(s.substr(0, slash), 10);
    if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
  } catch (const std::invalid_argument&) {
    format_error("bad rational \"" + s + "\"");
  }
  if (den == 0) format_error("zero denominator in \"" + s + "\"");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

FieldPtr parse_field_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(Errc::BadParameters, "field must be prime:P or cyclotomic:N, got " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::int64_t value = parse_int(spec.substr(colon + 1));
  if (kind == "prime") return make_prime_field(value);
  if (kind == "cyclotomic") {
    if (value < 1 || value > 10000) throw Error(Errc::BadParameters, "conductor out of range");
    return make_cyclotomic_field(static_cast<int>(value));
  }
  throw Error(Errc::BadParameters, "unknown field kind " + kind);
}

Json field_to_json(const Field& f) {
  if (f.kind() == FieldKind::Prime) return {{"kind", "prime"}, {"modulus", f.modulus()}};
  return {{"kind", "cyclotomic"}, {"conductor", f.conductor()}};
}

FieldPtr field_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (kind == "prime") return make_prime_field(integer(member(j, "modulus"), "modulus"));
  if (kind == "cyclotomic") {
    const auto n = integer(member(j, "conductor"), "conductor");
    if (n < 1 || n > 10000) format_error("conductor out of range");
    return make_cyclotomic_field(static_cast<int>(n));
  }
  format_error("unknown field kind");
}

Json element_to_json(const Element& x) {
  if (x.field()->kind() == FieldKind::Prime) return x.residue();
  Json out = Json::array();
  for (const auto& q : x.coefficients()) out.push_back(rational_string(q));
  return out;
}

Element element_from_json(const FieldPtr& f, const Json& j) {
  if (f->kind() == FieldKind::Prime) {
    const auto v = integer(j, "prime-field element");
    if (v < 0 || v >= f->modulus()) format_error("residue out of range");
    return Element::from_int(f, v);
  }
  if (!j.is_array() || j.size() != static_cast<std::size_t>(f->degree()))
    format_error("cyclotomic element needs " + std::to_string(f->degree()) + " coefficients");
  std::vector<mpq_class> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) format_error("coefficients are \"num/den\" strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Element::from_coefficients(f, std::move(coeffs));
}

Json point_to_json(const Homogeneous& p) {
  Json out = Json::array();
  for (const auto& x : p.coords()) out.push_back(element_to_json(x));
  return out;
}

ProjectivePoint point_from_json(const FieldPtr& f, const Json& j) {
  if (!j.is_array() || j.size() != 3) format_error("points have three coordinates");
  Vector v;
  for (const auto& x : j) v.push_back(element_from_json(f, x));
  return ProjectivePoint(std::move(v));
}

Json table_to_json(const MultTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows()) {
    Json row = Json::array();
    for (auto x : r) row.push_back(x + 1);
    rows.push_back(std::move(row));
  }
  return {{"order", t.order()}, {"names", t.names()}, {"table", std::move(rows)}};
}

MultTable table_from_json(const Json& j) {
  const Json& rows = member(j, "table");
  if (!rows.is_array()) format_error("table must be an array of rows");
  const std::size_t n = rows.size();
  if (j.contains("order") && integer(j.at("order"), "order") != static_cast<std::int64_t>(n))
    format_error("table order mismatch");
  std::vector<std::vector<Index>> table;
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != n) format_error("table must be square");
    std::vector<Index> row;
    for (const auto& x : r) {
      const auto v = integer(x, "table entry");
      if (v < 1 || v > static_cast<std::int64_t>(n)) format_error("table entry out of range");
      row.push_back(static_cast<Index>(v - 1));
    }
    table.push_back(std::move(row));
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    const Json& jn = j.at("names");
    if (!jn.is_array()) format_error("names must be an array");
    for (const auto& s : jn) {
      if (!s.is_string()) format_error("names must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  return MultTable::validate(std::move(table), std::move(names));
}

Json partial_square_to_json(const PartialSquare& s) {
  return {{"order", s.order()}, {"table", s.to_one_based()}};
}

Json multinet_to_json(const LabeledMultinet& m) {
  Json comps = Json::array();
  for (const auto& c : m.components()) {
    Json pts = Json::array();
    for (const auto& p : c) pts.push_back(point_to_json(p));
    comps.push_back(std::move(pts));
  }
  Json out;
  out["format"] = kFormatTag;
  out["field"] = field_to_json(*m.field());
  out["order"] = m.order();
  out["components"] = std::move(comps);
  out["labels"] = m.labels() ? table_to_json(*m.labels()) : Json(nullptr);
  out["provenance"] = m.provenance();
  return out;
}

LabeledMultinet multinet_from_json(const Json& j) {
  try {
    const Json& format = member(j, "format");
    if (!format.is_string() || format.get<std::string>() != kFormatTag)
      format_error("unsupported format " + format.dump());
    const FieldPtr f = field_from_json(member(j, "field"));
    const auto n = integer(member(j, "order"), "order");
    const Json& jc = member(j, "components");
    if (!jc.is_array() || jc.size() != 3) format_error("expected three components");
    std::array<Component, 3> comps;
    for (std::size_t c = 0; c < 3; ++c) {
      if (!jc[c].is_array() || static_cast<std::int64_t>(jc[c].size()) != n)
        format_error("component " + std::to_string(c + 1) + " does not have order points");
      for (const auto& p : jc[c]) comps[c].push_back(point_from_json(f, p));
    }
    std::optional<MultTable> labels;
    if (j.contains("labels") && !j.at("labels").is_null()) labels = table_from_json(j.at("labels"));
    Json provenance = j.contains("provenance") ? j.at("provenance") : Json::object();
    return LabeledMultinet(f, std::move(labels), std::move(comps), std::move(provenance));
  } catch (const nlohmann::json::exception& e) {
    format_error(e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_multinet(const std::filesystem::path& path, const LabeledMultinet& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::BadParameters, "cannot write " + path.string());
  out << dump(multinet_to_json(m));
  if (!out) throw Error(Errc::BadParameters, "failed writing " + path.string());
}

LabeledMultinet read_multinet(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FormatError, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    format_error(path.string() + ": " + e.what());
  }
  return multinet_from_json(j);
}

}  // namespace ldm
