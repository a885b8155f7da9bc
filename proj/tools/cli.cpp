#include "cli.hpp"

#include "json_io.hpp"
#include "toric/catalog.hpp"
#include "toric/error.hpp"
#include "toric/numerics/beta_g.hpp"
#include "toric/numerics/forms.hpp"
#include "toric/numerics/giroux.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

namespace toric::cli {

namespace {

using io::Json;
using numerics::Vec;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw io::InputError("", std::string("not valid JSON: ") + e.what());
  }
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

RatVector parse_levels(const std::string& text) {
  try {
    return parse_rational_list(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int report_exit(bool passed) { return passed ? 0 : 1; }

// ---------------------------------------------------------------- verbs

struct ConeArgs {
  std::string input, spec, convention = "proper";
};

Cone load_cone(const ConeArgs& a) {
  if (!a.spec.empty() && !a.input.empty()) throw UsageError("give either --input or --spec");
  if (!a.spec.empty()) {
    try {
      return moment_cone(parse_manifold(a.spec));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (a.input.empty()) throw UsageError("--input or --spec is required");
  return io::cone_from(read_json(a.input));
}

int classify_cone(const ConeArgs& a, std::ostream& out) {
  const auto conv = a.convention == "all" ? GoodnessConvention::AllFaces : GoodnessConvention::ProperFaces;
  emit(out, io::to_json(classify(load_cone(a), conv)));
  return 0;
}

int synthesize(const ConeArgs& a, const std::string& reeb, std::ostream& out) {
  const Cone c = load_cone(a);
  const ReebSynthesis rs = reeb.empty() ? synthesize_reeb(c) : reeb_from_vector(c, io::int_vector_from(Json::parse("[" + reeb + "]"), "/reeb"));
  emit(out, io::to_json(rs));
  return 0;
}

int slice_verb(const ConeArgs& a, const std::string& reeb, const std::string& level, std::ostream& out) {
  const Cone c = load_cone(a);
  const ReebSynthesis rs = reeb.empty() ? synthesize_reeb(c) : reeb_from_vector(c, io::int_vector_from(Json::parse("[" + reeb + "]"), "/reeb"));
  Rational lv = 1;
  if (!level.empty()) {
    try {
      lv = parse_rational(level);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  emit(out, {{"reeb", io::to_json(rs.reeb)}, {"level", io::to_json(lv)}, {"polytope", io::to_json(slice(c, rs, lv))}});
  return 0;
}

int probe_scan(const std::string& path, int q, int radius, std::ostream& out) {
  const LabeledPolytope p = io::polytope_from(read_json(path));
  const auto verdicts = scan_grid(p, q, radius);
  Json points = Json::array(), undisplaced = Json::array();
  std::size_t displaced = 0;
  for (const auto& v : verdicts) {
    points.push_back(io::to_json(v));
    if (v.displaceable) {
      ++displaced;
    } else {
      undisplaced.push_back(io::to_json(v.point));
    }
  }
  emit(out, {{"denominator", q},
             {"radius", radius},
             {"points", points},
             {"summary",
              {{"total", verdicts.size()},
               {"displaceable", displaced},
               {"undisplaced", verdicts.size() - displaced},
               {"undisplaced_points", undisplaced}}}});
  return 0;
}

int classify_fiber_verb(const std::string& input, const std::string& spec, const std::string& levels,
                        const std::string& extra, std::ostream& out) {
  Fiber f;
  if (!input.empty()) {
    f = io::fiber_from(read_json(input));
  } else {
    if (spec.empty()) throw UsageError("--spec or --input is required");
    ManifoldSpec s;
    try {
      s = parse_manifold(spec);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    f = make_fiber(s, levels.empty() ? RatVector{} : parse_levels(levels), extra.empty() ? RatVector{} : parse_levels(extra));
  }
  const Verdict v = classify_fiber(f);
  const bool ok = reverify(v, f);
  emit(out, {{"fiber", io::to_json(f)}, {"verdict", io::to_json(v)}, {"reverified", ok}});
  return report_exit(ok);
}

struct GirouxArgs {
  std::size_t d = 2;
  std::string fiber, t = "auto", group_law;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
};

int verify_giroux(const GirouxArgs& a, std::ostream& out) {
  if (!a.group_law.empty()) {
    const auto st = parse_doubles(a.group_law);
    if (st.size() != 2) throw UsageError("--group-law expects s,t");
    const auto r = numerics::giroux_group_law_check(st[0], st[1], a.d, a.samples, a.seed);
    emit(out, io::to_json(r));
    return report_exit(r.passed);
  }
  RatVector levels;
  if (a.fiber.empty()) {
    levels.assign(a.d, make_rational(1, static_cast<long long>(a.d)));
  } else {
    levels = parse_levels(a.fiber);
  }
  if (levels.size() != a.d) throw UsageError("--fiber needs " + std::to_string(a.d) + " levels");
  const Fiber f = make_fiber(ManifoldSpec::sphere(a.d), levels);
  const double c1 = std::sqrt(to_double(levels[0]));
  double t = 0;
  if (a.t == "auto") {
    t = numerics::min_displacement_time(c1) + 0.01;
  } else {
    const auto v = parse_doubles(a.t);
    if (v.size() != 1) throw UsageError("--t expects a number or 'auto'");
    t = v[0];
  }
  const auto r = numerics::verify_fiber_displaced(f, t, a.samples, a.seed);
  emit(out, io::to_json(r));
  return report_exit(r.passed);
}

struct ContactoArgs {
  std::size_t d = 2;
  std::string map = "giroux";
  double t = 1, fd_step = 1e-5, tolerance = 1e-6;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

int verify_contacto(const ContactoArgs& a, std::ostream& out) {
  numerics::MapUnderTest map;
  if (a.map == "identity") {
    map = numerics::identity_map();
  } else if (a.map == "giroux") {
    if (a.t < 0) throw UsageError("--t must be nonnegative");
    map = numerics::giroux_ambient_map(a.t, a.d);
  } else if (a.map == "conjugate") {
    map = numerics::conjugate_first_map();
  } else {
    throw UsageError("unknown map '" + a.map + "'");
  }
  const auto m = numerics::Manifold::of(ManifoldSpec::sphere(a.d));
  auto r = numerics::verify_contactomorphism(map, numerics::FormSpec::standard(a.d), m, a.samples, a.fd_step, a.seed, a.tolerance);
  if (a.map == "giroux") r.values["t"] = a.t;
  emit(out, io::to_json(r));
  return report_exit(r.passed);
}

struct BetaArgs {
  std::string profile = "identity", csv;
  double c = 1, eps = 0.5, s = 0;
  std::size_t grid = 1000;
};

numerics::Profile make_profile(const BetaArgs& a) {
  if (a.profile == "identity") return numerics::Profile::identity();
  if (a.profile == "zero") return numerics::Profile::zero();
  if (a.profile == "constant") return numerics::Profile::constant(a.c);
  if (a.profile == "delta") return numerics::Profile::delta(a.eps, a.s);
  throw UsageError("unknown profile '" + a.profile + "'");
}

void write_csv(const std::string& path, const std::string& header, const std::vector<std::pair<double, double>>& rows) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << header << "\n" << std::setprecision(17);
  for (const auto& [x, y] : rows) f << x << "," << y << "\n";
}

int check_beta_g(const BetaArgs& a, std::ostream& out) {
  const auto p = make_profile(a);
  const auto r = numerics::contact_condition_beta_g(p, a.grid);
  if (!a.csv.empty()) write_csv(a.csv, "h,E", numerics::beta_g_series(p, a.grid));
  Json j = io::to_json(r);
  j["profile"] = p.name;
  emit(out, j);
  return report_exit(r.passed);
}

struct FlowArgs {
  std::size_t d = 2, coord = 1;
  std::string field = "reeb", point;
  double T = 1, dt = 1e-3;
  std::uint64_t seed = 0;
  bool period = false;
};

int flow_verb(const FlowArgs& a, std::ostream& out) {
  const ManifoldSpec spec = ManifoldSpec::sphere(a.d);
  const auto m = numerics::Manifold::of(spec);
  Vec p;
  if (a.point.empty()) {
    std::mt19937_64 rng(a.seed);
    p = m.sample(rng);
  } else {
    const auto v = parse_doubles(a.point);
    if (v.size() != 2 * a.d) throw UsageError("--point needs " + std::to_string(2 * a.d) + " coordinates");
    p = Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
  }
  if (std::abs(m.constraint(p)) > 1e-12) throw Error(ErrorCode::OffManifold, "--point is not on the unit sphere");
  if (a.coord < 1 || a.coord > a.d) throw UsageError("--coord must lie in 1..d");
  const auto alpha = numerics::FormSpec::standard(a.d);
  numerics::VectorField field;
  if (a.field == "reeb") {
    field = numerics::hamiltonian_flow_field(alpha, m, [](const Vec&) { return 1.0; });
  } else if (a.field == "rotation") {
    field = numerics::rotation_field(a.d, {a.coord - 1});
  } else if (a.field == "moment") {
    const auto j = static_cast<Eigen::Index>(2 * (a.coord - 1));
    field = numerics::hamiltonian_flow_field(
        alpha, m, [j](const Vec& q) { return std::numbers::pi * (q[j] * q[j] + q[j + 1] * q[j + 1]); });
  } else {
    throw UsageError("unknown field '" + a.field + "'");
  }
  const auto r = numerics::flow(field, m, p, a.T, a.dt);
  const auto mu0 = moment_map(spec, p), mu1 = moment_map(spec, r.point);
  double drift = 0;
  for (std::size_t i = 0; i < mu0.size(); ++i) drift = std::max(drift, std::abs(mu0[i] - mu1[i]));
  Json j = {{"field", a.field},
            {"T", a.T},
            {"dt", a.dt},
            {"steps", r.steps},
            {"start", std::vector<double>(p.data(), p.data() + p.size())},
            {"point", std::vector<double>(r.point.data(), r.point.data() + r.point.size())},
            {"max_drift", r.max_drift},
            {"moment_drift", drift}};
  if (a.period) j["period"] = numerics::measure_period(field, m, p, a.dt, std::max(a.T, 8.0));
  emit(out, j);
  return 0;
}

struct ReportArgs {
  std::vector<std::string> inputs;
  std::string csv, series, profile = "identity";
  std::size_t points = 100;
  double eps = 0.5, s = 0;
};

std::string summarize(const Json& j) {
  std::ostringstream line;
  line << std::setprecision(6);
  if (j.contains("check")) {
    line << (j.value("passed", false) ? "OK   " : "FAIL ") << j.value("check", std::string())
         << " samples=" << j.value("samples", 0) << " max_residual=" << j.value("max_residual", 0.0)
         << " min_margin=" << j.value("min_margin", 0.0);
  } else if (j.contains("verdict")) {
    const Json& v = j["verdict"];
    line << (j.value("reverified", false) ? "OK   " : "FAIL ") << j["fiber"].value("spec", std::string()) << " "
         << v.value("status", std::string()) << " via " << v.value("method", std::string());
  } else if (j.contains("summary")) {
    const Json& s = j["summary"];
    line << "SCAN q=" << j.value("denominator", 0) << " points=" << s.value("total", 0)
         << " displaceable=" << s.value("displaceable", 0) << " undisplaced=" << s.value("undisplaced", 0);
  } else if (j.contains("reeb_type")) {
    line << "CONE good=" << j["good"] << " strictly_convex=" << j["strictly_convex"] << " lineality=" << j["lineality"]
         << " reeb_type=" << j["reeb_type"];
  } else {
    line << "???  unrecognized document";
  }
  return line.str();
}

int report_verb(const ReportArgs& a, std::ostream& out) {
  for (const auto& path : a.inputs) out << summarize(read_json(path)) << "\n";
  if (!a.series.empty()) {
    if (a.csv.empty()) throw UsageError("--series needs --csv");
    if (a.points < 2) throw UsageError("--points must be at least 2");
    if (a.series == "displacement-time") {
      std::vector<std::pair<double, double>> rows;
      for (std::size_t i = 1; i < a.points; ++i) {
        const double c1 = static_cast<double>(i) / static_cast<double>(a.points);
        rows.emplace_back(c1, numerics::min_displacement_time(c1));
      }
      write_csv(a.csv, "c1,T", rows);
    } else if (a.series == "beta-g") {
      BetaArgs b;
      b.profile = a.profile;
      b.eps = a.eps;
      b.s = a.s;
      write_csv(a.csv, "h,E", numerics::beta_g_series(make_profile(b), a.points));
    } else {
      throw UsageError("unknown series '" + a.series + "'");
    }
    out << "wrote " << a.series << " series to " << a.csv << "\n";
  }
  return 0;
}

Json error_json(const std::string& code, const std::string& message, const std::string& pointer = {}) {
  Json e = {{"code", code}, {"message", message}};
  if (!pointer.empty() || code == "SchemaViolation") e["pointer"] = pointer;
  return {{"error", e}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric contact geometry toolkit", "toric"};
  app.require_subcommand(1);

  ConeArgs cone;
  std::string reeb, level;
  auto add_cone = [&cone](CLI::App* sub) {
    sub->add_option("--input", cone.input, "cone JSON file ('-' for stdin)");
    sub->add_option("--spec", cone.spec, "catalog manifold whose moment cone to use, e.g. sphere:3");
  };
  auto* c_classify = app.add_subcommand("classify-cone", "Classify a moment cone");
  add_cone(c_classify);
  c_classify->add_option("--convention", cone.convention, "goodness convention")->check(CLI::IsMember({"proper", "all"}));
  auto* c_synth = app.add_subcommand("synthesize-reeb", "Integral Reeb vector with a basis witness");
  add_cone(c_synth);
  c_synth->add_option("--reeb", reeb, "use this Reeb vector instead, e.g. 1,2");
  auto* c_slice = app.add_subcommand("slice", "Labeled slice polytope of a Reeb type cone");
  add_cone(c_slice);
  c_slice->add_option("--reeb", reeb, "Reeb vector, e.g. 1,1,1");
  c_slice->add_option("--level", level, "slice level p/q (default 1)");

  std::string polytope;
  int denominator = 0, radius = 3;
  auto* c_probe = app.add_subcommand("probe-scan", "Probe every interior point of a rational grid");
  c_probe->add_option("--polytope", polytope, "labeled polytope JSON file")->required();
  c_probe->add_option("--denominator", denominator, "grid denominator q >= 2")->required();
  c_probe->add_option("--radius", radius, "probe direction search radius");

  std::string f_input, f_spec, f_levels, f_extra;
  auto* c_fiber = app.add_subcommand("classify-fiber", "Displaceability verdict for a toric fiber");
  c_fiber->alias("classify");
  c_fiber->add_option("--input", f_input, "fiber JSON file");
  c_fiber->add_option("--spec", f_spec, "manifold, e.g. sphere:3, lens:3:2, product:2, tk:2:3, cosphere:3");
  c_fiber->add_option("--fiber", f_levels, "levels |z_j|^2 as p/q list");
  c_fiber->add_option("--extra", f_extra, "extra moment coordinates (h; x, y[, h]; or p)");

  GirouxArgs gir;
  auto* c_giroux = app.add_subcommand("verify-giroux", "Check that tau_t displaces a sphere fiber");
  c_giroux->add_option("--d", gir.d, "complex dimension")->check(CLI::Range(1, 64));
  c_giroux->add_option("--fiber", gir.fiber, "levels |z_j|^2 as p/q list (default: central fiber)");
  c_giroux->add_option("--t", gir.t, "time, or 'auto' for T(c_1) + 0.01");
  c_giroux->add_option("--samples", gir.samples);
  c_giroux->add_option("--seed", gir.seed);
  c_giroux->add_option("--group-law", gir.group_law, "check tau_s tau_t = tau_{s+t} instead, given s,t");

  ContactoArgs con;
  auto* c_contacto = app.add_subcommand("verify-contacto", "Check phi^* alpha_st = f alpha_st, f > 0");
  c_contacto->add_option("--d", con.d)->check(CLI::Range(1, 64));
  c_contacto->add_option("--map", con.map)->check(CLI::IsMember({"identity", "giroux", "conjugate"}));
  c_contacto->add_option("--t", con.t, "Giroux time");
  c_contacto->add_option("--samples", con.samples);
  c_contacto->add_option("--seed", con.seed);
  c_contacto->add_option("--fd-step", con.fd_step);
  c_contacto->add_option("--tolerance", con.tolerance);

  BetaArgs beta;
  auto* c_beta = app.add_subcommand("check-beta-g", "Contact condition for g(h) dtheta + alpha_st");
  c_beta->add_option("--profile", beta.profile)->check(CLI::IsMember({"identity", "zero", "constant", "delta"}));
  c_beta->add_option("--c", beta.c, "value of the constant profile");
  c_beta->add_option("--eps", beta.eps, "delta profile width");
  c_beta->add_option("--s", beta.s, "interpolation parameter of the delta family");
  c_beta->add_option("--grid", beta.grid, "number of subintervals of [-1, 1]");
  c_beta->add_option("--csv", beta.csv, "also write the (h, E) series");

  FlowArgs fl;
  auto* c_flow = app.add_subcommand("flow", "Integrate a contact vector field on the sphere");
  c_flow->add_option("--d", fl.d)->check(CLI::Range(1, 64));
  c_flow->add_option("--field", fl.field)->check(CLI::IsMember({"reeb", "rotation", "moment"}));
  c_flow->add_option("--coord", fl.coord, "complex coordinate for rotation/moment (1-based)");
  c_flow->add_option("--point", fl.point, "start point x1,y1,...; random from --seed otherwise");
  c_flow->add_option("--T", fl.T);
  c_flow->add_option("--dt", fl.dt);
  c_flow->add_option("--seed", fl.seed);
  c_flow->add_flag("--measure-period", fl.period, "also report the first return time");

  ReportArgs rep;
  auto* c_report = app.add_subcommand("report", "Summarize JSON reports; optionally write a CSV series");
  c_report->add_option("inputs", rep.inputs, "report files");
  c_report->add_option("--csv", rep.csv);
  c_report->add_option("--series", rep.series)->check(CLI::IsMember({"displacement-time", "beta-g"}));
  c_report->add_option("--points", rep.points);
  c_report->add_option("--profile", rep.profile);
  c_report->add_option("--eps", rep.eps);
  c_report->add_option("--s", rep.s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(out, error_json("UsageError", e.what()));
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_classify->parsed()) return classify_cone(cone, out);
    if (c_synth->parsed()) return synthesize(cone, reeb, out);
    if (c_slice->parsed()) return slice_verb(cone, reeb, level, out);
    if (c_probe->parsed()) return probe_scan(polytope, denominator, radius, out);
    if (c_fiber->parsed()) return classify_fiber_verb(f_input, f_spec, f_levels, f_extra, out);
    if (c_giroux->parsed()) return verify_giroux(gir, out);
    if (c_contacto->parsed()) return verify_contacto(con, out);
    if (c_beta->parsed()) return check_beta_g(beta, out);
    if (c_flow->parsed()) return flow_verb(fl, out);
    if (c_report->parsed()) return report_verb(rep, out);
  } catch (const io::InputError& e) {
    emit(out, error_json("SchemaViolation", e.what(), e.pointer()));
    err << "input error at '" << e.pointer() << "': " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    emit(out, error_json(std::string(to_string(e.code())), e.what()));
    err << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    emit(out, error_json("UsageError", e.what()));
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    emit(out, error_json("UsageError", e.what()));
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace toric::cli
