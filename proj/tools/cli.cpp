#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"

#include "hyp3f2/render.hpp"

namespace hyp3f2::cli {

namespace {

struct Config {
  std::string p, q, a;
  std::string format = "text";
  double tol = 1e-8;
  double sigma_min = 2.0;
  long long iteration_cap = 0;
  bool check = false;
};

Params<GaussianRational> parse_point(const std::string& text) {
  Params<GaussianRational> a;
  std::stringstream ss(text);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 5) throw std::invalid_argument("parameter point needs exactly 5 entries");
    a[n++] = GaussianRational::parse(item);
  }
  if (n != 5) throw std::invalid_argument("parameter point needs exactly 5 entries");
  return a;
}

SeriesOptions series_options(const Config& cfg) {
  SeriesOptions opt = default_series_options();
  opt.sigma_min = cfg.sigma_min;
  if (cfg.iteration_cap > 0) opt.iteration_cap = cfg.iteration_cap;
  return opt;
}

int cmd_relation(const Config& cfg, std::ostream& out) {
  const ThreeTermRelation rel = three_term_coefficients(ShiftVector::parse(cfg.p), ShiftVector::parse(cfg.q));
  if (cfg.format == "json") {
    out << to_json(rel).dump(2) << "\n";
  } else if (cfg.format == "latex") {
    out << latex(rel) << "\n";
  } else {
    out << text(rel);
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const ShiftVector p = ShiftVector::parse(cfg.p), q = ShiftVector::parse(cfg.q);
  if (p == q) throw DegenerateShifts("three-term relation needs p != q");
  const Params<GaussianRational> a = parse_point(cfg.a);
  const SeriesOptions opt = series_options(cfg);
  const ResidualReport report = verify_three_term(p, q, a, opt);
  const bool ok = max_residual(report) < cfg.tol;
  if (cfg.format == "json") {
    out << Json{{"p", to_json(p)}, {"q", to_json(q)}, {"residuals", to_json(report)}, {"tol", cfg.tol},
                {"pass", ok}}
               .dump(2)
        << "\n";
  } else {
    out << text(report) << (ok ? "PASS" : "FAIL") << " tol=" << cfg.tol << "\n";
  }
  return ok ? kOk : kResidualAboveTolerance;
}

int cmd_matrix(const Config& cfg, std::ostream& out) {
  const ShiftVector p = ShiftVector::parse(cfg.p);
  const SymbolicMatrix m = connection_matrix(p);
  const RationalFunction delta = connection_det_formula(p);
  if (cfg.format == "json") {
    out << Json{{"p", to_json(p)}, {"matrix", to_json(m)}, {"delta", to_json(delta)}}.dump(2) << "\n";
  } else if (cfg.format == "latex") {
    out << "A(a;" << p << ") = " << latex(m) << "\n\\delta(a;" << p << ") = " << latex(delta) << "\n";
  } else {
    out << "A(a;" << p << ")\n" << text(m) << "delta = " << delta.str() << "\n";
  }
  return kOk;
}

int cmd_orbit(const Config& cfg, std::ostream& out) {
  const auto orbit = orbit_relations(ShiftVector::parse(cfg.p), ShiftVector::parse(cfg.q));
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const OrbitRelation& r : orbit) {
      Json j = to_json(r.relation);
      j["element"] = r.element.word_str();
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
  } else if (cfg.format == "latex") {
    for (const OrbitRelation& r : orbit) out << latex(r.relation) << "\n";
  } else {
    out << orbit.size() << " distinct relations\n";
    for (const OrbitRelation& r : orbit) out << "\n[" << r.element.word_str() << "]\n" << text(r.relation);
  }
  return kOk;
}

int cmd_group(const Config& cfg, std::ostream& out) {
  if (!cfg.check) {
    const auto group = enumerate_group();
    out << "order=" << group.size() << "\n";
    for (const GroupElement& g : group) out << g.word_str() << "\n";
    return kOk;
  }
  bool all = true;
  for (const CheckItem& item : group_check()) {
    out << item.name;
    if (!item.detail.empty()) out << " " << item.detail;
    out << " " << (item.passed ? "PASS" : "FAIL") << "\n";
    all = all && item.passed;
  }
  return all ? kOk : kGroupCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-term relations for 3F2 at unit argument"};
  app.require_subcommand(1);
  Config cfg;
  const std::vector<std::string> formats{"text", "json", "latex"};

  auto* relation = app.add_subcommand("relation", "coefficients u, v of h(a) = u h(a+p) + v h(a+q)");
  auto* verify = app.add_subcommand("verify", "residuals of a relation for all six companions at a point");
  auto* matrix = app.add_subcommand("matrix", "connection matrix A(a;p) and its determinant");
  auto* orbit = app.add_subcommand("orbit", "relations obtained from (p,q) by the symmetry group");
  auto* group = app.add_subcommand("group", "the order-72 symmetry group");

  for (auto* sub : {relation, verify, orbit}) {
    sub->add_option("--p", cfg.p, "shift p0,p1,p2,p3,p4")->required();
    sub->add_option("--q", cfg.q, "shift q0,q1,q2,q3,q4")->required();
  }
  matrix->add_option("--p", cfg.p, "shift p0,p1,p2,p3,p4")->required();
  for (auto* sub : {relation, verify, matrix, orbit}) {
    sub->add_option("--format", cfg.format, "text, json or latex")->check(CLI::IsMember(formats));
  }
  verify->add_option("--a", cfg.a, "point a0,a1,a2,b1,b2 with entries like 0.3+0.1j")->required();
  verify->add_option("--tol", cfg.tol, "relative residual threshold");
  verify->add_option("--sigma-min", cfg.sigma_min, "required margin Re s >= sigma_min");
  verify->add_option("--iter-cap", cfg.iteration_cap, "series iteration cap (default from HYP3F2_ITER_CAP or 1e7)");
  group->add_flag("--check", cfg.check, "run the structural checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*relation) return cmd_relation(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*matrix) return cmd_matrix(cfg, out);
    if (*orbit) return cmd_orbit(cfg, out);
    return cmd_group(cfg, out);
  } catch (const DegenerateShifts& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerateShifts;
  } catch (const NonGenericPoint& e) {
    err << "error: " << e.what() << "\n";
    return kNonGeneric;
  } catch (const CoefficientPole& e) {
    err << "error: " << e.what() << "\n";
    return kNonGeneric;
  } catch (const PoleOfGamma& e) {
    err << "error: " << e.what() << "\n";
    return kNonGeneric;
  } catch (const SlowConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kSlowConvergence;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hyp3f2::cli
