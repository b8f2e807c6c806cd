#include "ldm/cli.hpp"

#include <CLI11.hpp>

#include "ldm/constructions.hpp"
#include "ldm/error.hpp"
#include "ldm/io.hpp"

namespace ldm {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string type;
  std::optional<int> m;
  int k = 0;
  int face = 1;
  std::uint64_t seed = 0;
  std::string field;
  std::string output;
  std::string input;
  std::size_t line = 0;
  std::string u, v;
};

Json spectrum_json(const LengthSpectrum& s) {
  Json out = Json::object();
  for (const auto& [length, count] : s) out[std::to_string(length)] = count;
  return out;
}

Json curve_json(const std::optional<CurveCoefficients>& c) {
  if (!c) return nullptr;
  Json out = Json::array();
  for (const auto& x : c->coefficients) out.push_back(element_to_json(x));
  return out;
}

Index resolve_element(const MultTable& t, const std::string& token) {
  if (auto i = t.find(token)) return *i;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used == token.size() && v >= 1 && v <= static_cast<long long>(t.order()))
      return static_cast<Index>(v - 1);
  } catch (const std::exception&) {
  }
  throw Error(Errc::BadParameters, "no element named or numbered " + token);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int construct(const Options& o) {
    const FieldPtr f = parse_field_spec(o.field);
    auto need_m = [&] {
      if (!o.m) throw Error(Errc::BadParameters, "--m is required for " + o.type);
      return *o.m;
    };
    std::optional<LabeledMultinet> m;
    if (o.type == "triangle") m = build_triangle(need_m(), f);
    else if (o.type == "conic-line") m = build_conic_line(need_m(), o.k, f);
    else if (o.type == "tetrahedron") m = build_tetrahedron(need_m(), f, o.face, o.seed);
    else if (o.type == "order18") m = build_order18(f);
    else throw Error(Errc::BadParameters, "unknown type " + o.type);

    if (!o.output.empty()) write_multinet(o.output, *m);
    const auto report_v = verify(*m);
    Json report = {{"ok", report_v.ok()},
                   {"command", "construct"},
                   {"field", f->name()},
                   {"order", m->order()},
                   {"lengths", report_v.ok() ? spectrum_json(length_spectrum(*m)) : Json(nullptr)},
                   {"provenance", m->provenance()},
                   {"output", o.output.empty() ? Json(nullptr) : Json(o.output)}};
    return emit(report);
  }

  int verify_file(const Options& o) {
    const auto m = read_multinet(o.input);
    const auto r = verify(m);
    Json report = {{"ok", r.ok()},
                   {"command", "verify"},
                   {"order", m.order()},
                   {"injective", r.injective},
                   {"disjoint", r.disjoint},
                   {"multinet_law", r.multinet_law},
                   {"labeled", r.labeled}};
    if (r.injective_witness) {
      const auto& w = *r.injective_witness;
      report["injective_witness"] = {{"component", w[0] + 1}, {"positions", {w[1] + 1, w[2] + 1}}};
    }
    if (r.disjoint_witness) {
      const auto& w = *r.disjoint_witness;
      report["disjoint_witness"] = {{"components", {w[0] + 1, w[2] + 1}}, {"positions", {w[1] + 1, w[3] + 1}}};
    }
    if (r.law_witness) report["law_witness"] = {{"x", (*r.law_witness)[0] + 1}, {"y", (*r.law_witness)[1] + 1}};
    if (!r.ok()) err_ << "verification failed for " << o.input << "\n";
    return emit(report);
  }

  int spectrum(const Options& o) {
    const auto m = load_verified(o.input);
    if (!m) return failed_verify("spectrum");
    const auto lines = belonging_lines(*m);
    Json long_lines = Json::array();
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (lines[i].length() > 1)
        long_lines.push_back({{"index", i}, {"line", point_to_json(lines[i].line)}, {"length", lines[i].length()}});
    return emit({{"ok", true},
                 {"command", "spectrum"},
                 {"order", m->order()},
                 {"lengths", spectrum_json(length_spectrum(lines))},
                 {"line_count", lines.size()},
                 {"long_lines", std::move(long_lines)}});
  }

  int classify_file(const Options& o) {
    const auto m = load_verified(o.input);
    if (!m) return failed_verify("classify");
    const auto c = classify(*m);
    Json lines = Json::array();
    for (const auto& l : c.lines) lines.push_back(point_to_json(l));
    return emit({{"ok", true},
                 {"command", "classify"},
                 {"verdict", to_string(c.verdict)},
                 {"lines", std::move(lines)},
                 {"conic", curve_json(c.conic)},
                 {"cubic", curve_json(c.cubic)},
                 {"witness_covers", witness_covers(*m, c)}});
  }

  int labelcheck(const Options& o) {
    const auto m = load_verified(o.input);
    if (!m) return failed_verify("labelcheck");
    const auto v = group_labeling_obstruction(*m, closure_cap_from_env());
    Json report = {{"ok", true}, {"command", "labelcheck"}};
    report["verdict"] = v.obstructed ? "OBSTRUCTED" : "INCONCLUSIVE";
    if (v.quotient_order) report["quotient_order"] = *v.quotient_order;
    Json rows = Json::array();
    for (auto r : v.rows_used) rows.push_back(r + 1);
    report["complete_rows"] = std::move(rows);
    return emit(report);
  }

  int latin(const Options& o) {
    const auto m = load_verified(o.input);
    if (!m) return failed_verify("latin");
    const auto s = partial_latin_square(*m);
    return emit({{"ok", true},
                 {"command", "latin"},
                 {"order", s.order()},
                 {"undetermined", s.undetermined_count()},
                 {"square", s.to_one_based()}});
  }

  int isotope(const Options& o) {
    const auto m = load_verified(o.input);
    if (!m) return failed_verify("isotope");
    if (!m->labels()) throw Error(Errc::BadParameters, "the file carries no label table");
    const auto lines = belonging_lines(*m);
    if (o.line >= lines.size())
      throw Error(Errc::BadParameters, "line index out of range (" + std::to_string(lines.size()) + " lines)");
    const MultTable& t = *m->labels();
    const Index u = resolve_element(t, o.u), v = resolve_element(t, o.v);
    const auto out = relabel_through_line(*m, lines[o.line], u, v);
    write_multinet(o.output, out);
    const auto r = verify(out);
    return emit({{"ok", r.ok()},
                 {"command", "isotope"},
                 {"unit", t.names()[t(u, v)]},
                 {"output", o.output}});
  }

 private:
  std::optional<LabeledMultinet> load_verified(const std::string& path) {
    auto m = read_multinet(path);
    if (!verify(m).ok()) return std::nullopt;
    return m;
  }

  int failed_verify(const char* command) {
    err_ << command << ": input does not verify; run `verify` for a witness\n";
    return emit({{"ok", false}, {"command", command}, {"error", "verification failed"}});
  }

  int emit(const Json& report) {
    out_ << report.dump(2) << "\n";
    return report.at("ok").get<bool>() ? kOk : kCheckFailed;
  }

  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Light dual multinets: build, verify, classify, and test group labels"};
  app.name("ldm");
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "build a multinet and write it as ldm-1 JSON");
  construct->add_option("--type", o.type, "triangle | conic-line | tetrahedron | order18")
      ->required()
      ->check(CLI::IsMember({"triangle", "conic-line", "tetrahedron", "order18"}));
  construct->add_option("--m", o.m, "family parameter m");
  construct->add_option("--k", o.k, "conic-line twist, 0 <= k < m")->capture_default_str();
  construct->add_option("--face", o.face, "tetrahedron face holding the center, 1..4")->capture_default_str();
  construct->add_option("--seed", o.seed, "tetrahedron center seed")->capture_default_str();
  construct->add_option("--field", o.field, "prime:P or cyclotomic:N")->required();
  construct->add_option("-o,--output", o.output, "output file");

  auto file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.input, "ldm-1 file")->required();
    return sub;
  };
  auto* verify_cmd = file_command("verify", "check injectivity, disjointness and the multinet law");
  auto* spectrum_cmd = file_command("spectrum", "count belonging lines by length");
  auto* classify_cmd = file_command("classify", "find the curve configuration holding the points");
  auto* labelcheck_cmd = file_command("labelcheck", "test the order obstruction to group labels");
  auto* latin_cmd = file_command("latin", "print the partial latin square forced by the points");
  auto* isotope_cmd = file_command("isotope", "relabel by the principal isotope through a line");
  isotope_cmd->add_option("--line", o.line, "0-based index into the sorted belonging lines")->required();
  isotope_cmd->add_option("--u", o.u, "element on the line in component 1 (name or 1-based index)")->required();
  isotope_cmd->add_option("--v", o.v, "element on the line in component 2 (name or 1-based index)")->required();
  isotope_cmd->add_option("-o,--output", o.output, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Runner run(out, err);
  try {
    if (construct->parsed()) return run.construct(o);
    if (verify_cmd->parsed()) return run.verify_file(o);
    if (spectrum_cmd->parsed()) return run.spectrum(o);
    if (classify_cmd->parsed()) return run.classify_file(o);
    if (labelcheck_cmd->parsed()) return run.labelcheck(o);
    if (latin_cmd->parsed()) return run.latin(o);
    if (isotope_cmd->parsed()) return run.isotope(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    out << Json{{"ok", false}, {"error", to_string(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ldm
