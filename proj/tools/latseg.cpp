// latseg: command-line front end for lattice points on spheres, caps and
// segments.
//
//   latseg enumerate -d 3 -n 9 -o sphere.txt
//   latseg count -d 2 -n 25 --normal 1,0 --rho1 50 --rho2 2
//   latseg slice -d 2 -n 25 --normal 0,1
//   latseg kappa -d 3 -n 50 --max-norm 3
//   latseg approx --direction 1,1.4142135623730951 -H 4
//   latseg cover -d 3 -n 500 --direction 0.3,0.5,0.8 --theta 0.1
//   latseg verify --config configs/verify_default.json --csv rows.csv
//
// Exit codes: 0 success, 1 exact-chain violation, 2 budget exhausted,
// 3 exact answer demanded but unavailable, 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "latseg/harness.hpp"

namespace {

using namespace latseg;
using nlohmann::json;

constexpr int kExitChain = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInexact = 3;
constexpr int kExitUsage = 64;

struct InexactError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SphereArgs {
  int d = 0;
  std::int64_t n = 0;
  std::string points_path;
  std::uint64_t budget = kDefaultEnumerationBudget;

  void add(CLI::App* cmd) {
    cmd->add_option("-d,--dim", d, "dimension")->required()->check(CLI::Range(2, 64));
    cmd->add_option("-n", n, "squared radius")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--points", points_path, "read the sphere's points from a point-set file");
    cmd->add_option("--budget", budget, "enumeration step budget");
  }

  SphereSpec spec() const { return SphereSpec(d, n); }

  SpherePointSet points() const {
    if (points_path.empty()) return enumerate_sphere(spec(), budget);
    std::ifstream in(points_path);
    if (!in) throw DomainError("cannot open " + points_path);
    SpherePointSet pts = read_point_set(in);
    if (!(pts.sphere() == spec())) throw DomainError(points_path + " holds a different sphere");
    return pts;
  }
};

struct DirectionArgs {
  std::vector<std::int64_t> normal;
  std::vector<double> real;
  std::vector<std::string> quotients;

  void add(CLI::App* cmd) {
    auto* n = cmd->add_option("--normal", normal, "integer direction, e.g. 1,2,-1")->delimiter(',');
    auto* r = cmd->add_option("--direction", real, "real direction k*beta, e.g. 0.6,0.8")->delimiter(',');
    n->excludes(r);
    cmd->add_option("--quotients", quotients,
                    "exact coordinates of --direction as index=p/q, e.g. 0=1/2,2=1")
        ->delimiter(',')
        ->needs(r);
  }

  Direction get(int d) const {
    std::optional<Direction> out;
    if (!normal.empty()) {
      out = Direction::rational(normal);
    } else if (!real.empty()) {
      std::optional<RationalQuotients> q;
      if (!quotients.empty()) {
        q.emplace();
        double norm2 = 0;
        for (double x : real) norm2 += x * x;
        q->k = std::sqrt(norm2);
        for (const auto& item : quotients) {
          const auto eq = item.find('=');
          if (eq == std::string::npos) throw DomainError("quotient '" + item + "' is not index=value");
          q->indices.push_back(std::stoul(item.substr(0, eq)));
          q->values.push_back(parse_rational(item.substr(eq + 1)));
        }
      }
      out = Direction::real(real, std::move(q));
    } else {
      throw DomainError("a direction is required: --normal or --direction");
    }
    if (out->dimension() != d) throw DomainError("direction has the wrong dimension");
    return *out;
  }
};

struct RadiusArgs {
  std::string rho1, rho2;
  std::optional<double> theta, inner_theta;

  void add(CLI::App* cmd) {
    auto* r1 = cmd->add_option("--rho1", rho1, "outer squared radius, exact p/q");
    auto* t1 = cmd->add_option("--theta", theta, "opening angle (radians)");
    cmd->add_option("--rho2", rho2, "inner squared radius, exact p/q (default 0)");
    cmd->add_option("--inner-theta", inner_theta, "angle of the inner cap (radians)");
    r1->excludes(t1);
  }

  // Angles are a float convenience: the resulting squared radii are the
  // exact binary values of the double computation.
  std::pair<Rational, Rational> get(const SphereSpec& sphere) const {
    Rational r2 = 0;
    double inner = 0;
    if (inner_theta) {
      inner = *inner_theta;
      r2 = from_double(radius_from_angle(sphere, inner));
    } else if (!rho2.empty()) {
      r2 = parse_rational(rho2);
    }
    Rational r1;
    if (!rho1.empty()) {
      r1 = parse_rational(rho1);
    } else if (theta) {
      r1 = std::min(from_double(radius_from_angle(sphere, inner + *theta)), 4 * Rational(sphere.n));
    } else {
      throw DomainError("an outer radius is required: --rho1 or --theta");
    }
    return {r1, r2};
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  return out;
}

json interval_json(const Interval& x) {
  return {{"lo", to_string(x.lo())}, {"hi", to_string(x.hi())}, {"approx", to_double(x.mid())}};
}

json segment_json(const Segment& seg) {
  return {{"d", seg.sphere().d},
          {"n", seg.sphere().n},
          {"direction", seg.direction().describe()},
          {"rho1", to_string(seg.rho1())},
          {"rho2", to_string(seg.rho2())},
          {"theta", seg.opening_angle()}};
}

json report_json(const BoundReport& r) {
  return {{"d", r.d},
          {"n", r.n},
          {"theta", r.theta},
          {"rho1", to_string(r.rho1)},
          {"rho2", to_string(r.rho2)},
          {"direction", r.direction},
          {"mode", r.mode},
          {"s", r.s},
          {"H", r.H},
          {"a", r.a},
          {"norm_a", r.norm_a},
          {"phi_upper", r.phi_upper},
          {"count_S", {r.count_S.lo, r.count_S.hi}},
          {"count_Sprime", r.count_Sprime},
          {"slices_hit", r.slices_hit},
          {"kappa_b", r.kappa_b},
          {"bound_value", r.bound_value.str()},
          {"height_prime", r.height_prime},
          {"ratio_thm", r.ratio_thm},
          {"ratio_cover", r.ratio_cover},
          {"containment", r.containment},
          {"holds_exact_chain", r.holds_exact_chain}};
}

json approximation_json(const DirectionApproximation& a) {
  return {{"a", a.a},
          {"H", a.H},
          {"q", a.q},
          {"exponent", a.exponent},
          {"norm", interval_json(a.norm)},
          {"angle", interval_json(a.angle)},
          {"norm_bound", interval_json(a.norm_bound)},
          {"angle_bound", interval_json(a.angle_bound)},
          {"certified", a.certified()}};
}

// Each flat key of a JSON object becomes "--key value" ahead of the
// explicit arguments, so the command line overrides the file.
std::vector<std::string> config_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  std::vector<std::string> args;
  for (const auto& [key, value] : j.items()) {
    const std::string flag = key.size() == 1 ? "-" + key : "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
      continue;
    }
    std::string text;
    if (value.is_array()) {
      for (const auto& v : value) {
        if (!text.empty()) text += ',';
        text += v.is_string() ? v.get<std::string>() : v.dump();
      }
    } else {
      text = value.is_string() ? value.get<std::string>() : value.dump();
    }
    args.push_back(flag);
    args.push_back(text);
  }
  return args;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  // --config on any subcommand other than verify is a flat option file.
  if (!args.empty() && args[0] != "verify") {
    for (std::size_t i = 1; i + 1 < args.size(); ++i) {
      if (args[i] == "--config") {
        auto extra = config_args(args[i + 1]);
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        args.insert(args.begin() + 1, extra.begin(), extra.end());
        break;
      }
    }
  }

  CLI::App app{"Lattice points in spherical caps and segments"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  // enumerate
  SphereArgs en_sphere;
  std::string en_out;
  auto* en = app.add_subcommand("enumerate", "list the lattice points of the sphere |x|^2 = n");
  en_sphere.add(en);
  en->add_option("-o,--out", en_out, "point-set file to write");

  // count
  SphereArgs ct_sphere;
  DirectionArgs ct_dir;
  RadiusArgs ct_rad;
  bool ct_exact = false;
  auto* ct = app.add_subcommand("count", "count lattice points in a cap or segment");
  ct_sphere.add(ct);
  ct_dir.add(ct);
  ct_rad.add(ct);
  ct->add_flag("--exact", ct_exact, "fail with exit 3 unless the count is exact");

  // slice
  SphereArgs sl_sphere;
  std::vector<std::int64_t> sl_normal;
  std::string sl_out;
  auto* sl = app.add_subcommand("slice", "histogram of b . x over the sphere");
  sl_sphere.add(sl);
  sl->add_option("--normal", sl_normal, "integer normal b")->delimiter(',')->required();
  sl->add_option("-o,--out", sl_out, "CSV file (default stdout)");

  // kappa
  SphereArgs kp_sphere;
  std::int64_t kp_max_norm = 2;
  std::uint64_t kp_budget = kDefaultSweepBudget;
  auto* kp = app.add_subcommand("kappa", "largest hyperplane section over small primitive normals");
  kp_sphere.add(kp);
  kp->add_option("--max-norm", kp_max_norm, "sweep primitive normals with |b| <= max-norm")->check(CLI::PositiveNumber);
  kp->add_option("--sweep-budget", kp_budget, "normal x point budget");

  // approx
  DirectionArgs ap_dir;
  std::vector<std::string> ap_xi;
  std::int64_t ap_H = 0;
  bool ap_rq = false;
  auto* ap = app.add_subcommand("approx", "simultaneous Dirichlet approximation of reals or a direction");
  ap_dir.add(ap);
  ap->add_option("--xi", ap_xi, "reals to approximate, exact p/q or decimals")->delimiter(',');
  ap->add_option("-H", ap_H, "approximation parameter")->required()->check(CLI::PositiveNumber);
  ap->add_flag("--rational-quotients", ap_rq, "use the declared rational quotients of --direction");

  // cover
  SphereArgs cv_sphere;
  DirectionArgs cv_dir;
  RadiusArgs cv_rad;
  std::optional<std::int64_t> cv_H;
  std::string cv_mode = "generic";
  auto* cv = app.add_subcommand("cover", "covering segment and the bound chain for one segment");
  cv_sphere.add(cv);
  cv_dir.add(cv);
  cv_rad.add(cv);
  cv->add_option("-H", cv_H, "approximation parameter (default from theta)")->check(CLI::PositiveNumber);
  cv->add_option("--mode", cv_mode, "generic or rational_quotients")
      ->check(CLI::IsMember({"generic", "rational_quotients"}));

  // verify
  std::string vf_config, vf_csv, vf_summary;
  std::optional<std::size_t> vf_threads;
  auto* vf = app.add_subcommand("verify", "run the bound pipeline over a configured grid");
  vf->add_option("--config", vf_config, "JSON experiment config")->required()->check(CLI::ExistingFile);
  vf->add_option("--csv", vf_csv, "CSV output (default: config output.csv, else stdout)");
  vf->add_option("--summary", vf_summary, "summary JSON output (default: config output.summary, else stderr)");
  vf->add_option("--threads", vf_threads, "worker threads (0 = hardware)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*en) {
    const SpherePointSet pts = en_sphere.points();
    if (!en_out.empty()) {
      auto out = open_out(en_out);
      write_point_set(out, pts);
    }
    std::cout << pts.size() << '\n';
    return 0;
  }

  if (*ct) {
    const SphereSpec sphere = ct_sphere.spec();
    const auto [rho1, rho2] = ct_rad.get(sphere);
    const Segment seg(sphere, ct_dir.get(sphere.d), rho1, rho2);
    const CountResult c = count_segment(seg, ct_sphere.points());
    json j = {{"segment", segment_json(seg)}, {"exact", c.exact()}};
    if (c.exact())
      j["count"] = c.lo;
    else
      j["count_interval"] = {c.lo, c.hi};
    std::cout << j.dump(2) << '\n';
    if (ct_exact && !c.exact()) throw InexactError("membership undecided for some points");
    return 0;
  }

  if (*sl) {
    const SpherePointSet pts = sl_sphere.points();
    if (static_cast<int>(sl_normal.size()) != pts.sphere().d) throw DomainError("normal has the wrong dimension");
    const SliceHistogram h = slice(pts, sl_normal);
    if (sl_out.empty()) {
      write_histogram_csv(std::cout, h);
    } else {
      auto out = open_out(sl_out);
      write_histogram_csv(out, h);
    }
    return 0;
  }

  if (*kp) {
    const KappaEstimate k = kappa_estimate(kp_sphere.points(), kp_max_norm, kp_budget);
    json w = json::array();
    for (const auto& x : k.witnesses) w.push_back({{"normal", x.normal}, {"offset", x.offset}});
    std::cout << json{{"d", kp_sphere.d},
                      {"n", kp_sphere.n},
                      {"kappa_lower_bound", k.value},
                      {"max_normal_norm", k.candidate_bound},
                      {"normals_swept", k.normals_swept},
                      {"witnesses", w}}
                     .dump(2)
              << '\n';
    return 0;
  }

  if (*ap) {
    if (!ap_xi.empty()) {
      std::vector<Interval> xi;
      for (const auto& s : ap_xi) xi.emplace_back(parse_rational(s));
      const DirichletResult r = dirichlet_approx(xi, ap_H);
      std::cout << json{{"q", r.q},
                        {"p", r.p},
                        {"H", r.H},
                        {"max_error", interval_json(r.max_error)},
                        {"verified", verify_dirichlet(xi, r)}}
                       .dump(2)
                << '\n';
      return 0;
    }
    const int d = !ap_dir.normal.empty() ? static_cast<int>(ap_dir.normal.size()) : static_cast<int>(ap_dir.real.size());
    const Direction beta = ap_dir.get(d);
    const DirectionApproximation a =
        ap_rq ? approx_direction_rational_quotients(beta, ap_H) : approx_direction(beta, ap_H);
    json j = approximation_json(a);
    j["direction"] = beta.describe();
    std::cout << j.dump(2) << '\n';
    return 0;
  }

  if (*cv) {
    const SphereSpec sphere = cv_sphere.spec();
    const auto [rho1, rho2] = cv_rad.get(sphere);
    const Segment seg(sphere, cv_dir.get(sphere.d), rho1, rho2);
    const PipelineMode mode = cv_mode == "generic" ? PipelineMode::Generic : PipelineMode::RationalQuotients;
    const BoundReport r = bound_pipeline(seg, cv_sphere.points(), mode, cv_H);
    const CoveringSegment cov = build_covering(seg, r.a);
    json j = report_json(r);
    j["rho1_prime"] = to_string(cov.rho1_prime);
    j["rho2_prime"] = to_string(cov.rho2_prime);
    j["inner_cap_empty"] = cov.inner_cap_empty;
    std::cout << j.dump(2) << '\n';
    return r.holds_exact_chain ? 0 : kExitChain;
  }

  // verify
  std::ifstream in(vf_config);
  std::stringstream text;
  text << in.rdbuf();
  VerifyConfig cfg = parse_verify_config(text.str());
  if (vf_threads) cfg.threads = *vf_threads;
  if (!vf_csv.empty()) cfg.csv_path = vf_csv;
  if (!vf_summary.empty()) cfg.summary_path = vf_summary;

  const VerifyResult result = run_verify(cfg);
  if (cfg.csv_path.empty()) {
    write_reports_csv(std::cout, result.rows);
  } else {
    auto out = open_out(cfg.csv_path);
    write_reports_csv(out, result.rows);
  }
  const std::string summary = summary_json(result.summary);
  if (cfg.summary_path.empty()) {
    std::cerr << summary << '\n';
  } else {
    auto out = open_out(cfg.summary_path);
    out << summary << '\n';
  }
  if (result.summary.chain_failures > 0) {
    std::cerr << "exact chain violated on " << result.summary.chain_failures << " row(s):\n";
    for (std::size_t i : result.summary.failed_rows) std::cerr << csv_row(result.rows[i]) << '\n';
    return kExitChain;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InexactError& e) {
    std::cerr << "exact answer unavailable: " << e.what() << '\n';
    return kExitInexact;
  } catch (const PrecisionError& e) {
    std::cerr << "exact answer unavailable: " << e.what() << '\n';
    return kExitInexact;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
