#include "latseg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace latseg {

using nlohmann::json;

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
  // splitmix64 over the combined words
  std::uint64_t z = seed;
  for (std::uint64_t w : {a, b, c}) {
    z += 0x9e3779b97f4a7c15ULL + w;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
  }
  return z;
}

template <typename T>
void read_optional(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

std::string format_float(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// Config

void VerifyConfig::validate() const {
  if (dims.empty()) throw DomainError("config: dims must be non-empty");
  for (int d : dims)
    if (d < 2) throw DomainError("config: every dimension must be at least 2");
  if (n_step < 1 || n_from < 1 || n_to < n_from) throw DomainError("config: n range must be non-empty");
  if (thetas.empty()) throw DomainError("config: thetas must be non-empty");
  for (double t : thetas)
    if (!(t > 0 && t <= 2 * std::numbers::pi)) throw DomainError("config: thetas must lie in (0, 2 pi]");
  if (inner_angles.empty()) throw DomainError("config: inner_angles must be non-empty");
  for (double t : inner_angles)
    if (!(t >= 0 && t < 2 * std::numbers::pi)) throw DomainError("config: inner_angles must lie in [0, 2 pi)");
  if (lattice_directions + random_directions + rational_quotient_directions == 0)
    throw DomainError("config: no direction sampler enabled");
  if ((random_directions > 0 || rational_quotient_directions > 0) && !seed_given)
    throw DomainError("config: a seed is required for randomized direction samplers");
}

VerifyConfig parse_verify_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  VerifyConfig c;
  try {
    if (j.contains("seed")) {
      c.seed = j.at("seed").get<std::uint64_t>();
      c.seed_given = true;
    }
    read_optional(j, "dims", c.dims);
    if (j.contains("n")) {
      const json& n = j.at("n");
      read_optional(n, "from", c.n_from);
      read_optional(n, "to", c.n_to);
      read_optional(n, "step", c.n_step);
    }
    read_optional(j, "thetas", c.thetas);
    read_optional(j, "inner_angles", c.inner_angles);
    if (j.contains("directions")) {
      const json& dj = j.at("directions");
      read_optional(dj, "lattice", c.lattice_directions);
      read_optional(dj, "random", c.random_directions);
      read_optional(dj, "rational_quotients", c.rational_quotient_directions);
    }
    read_optional(j, "threads", c.threads);
    read_optional(j, "enumeration_budget", c.enumeration_budget);
    if (j.contains("output")) {
      read_optional(j.at("output"), "csv", c.csv_path);
      read_optional(j.at("output"), "summary", c.summary_path);
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

// ---------------------------------------------------------------------------
// Direction samplers

std::vector<std::vector<std::int64_t>> canonical_lattice_directions(const SpherePointSet& pts) {
  std::set<std::vector<std::int64_t>> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto x = pts[i];
    bool canonical = x.back() >= 0;
    for (std::size_t j = 1; j < x.size() && canonical; ++j) canonical = x[j - 1] >= x[j];
    if (!canonical) continue;
    const std::int64_t g = gcd_of(x);
    if (g == 0) continue;
    std::vector<std::int64_t> b(x.begin(), x.end());
    for (auto& v : b) v /= g;
    seen.insert(std::move(b));
  }
  return {seen.begin(), seen.end()};
}

Direction random_direction(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(d));
  double norm2 = 0;
  do {
    norm2 = 0;
    for (auto& x : v) {
      x = gauss(rng);
      norm2 += x * x;
    }
  } while (norm2 < 1e-6);
  return Direction::real(std::move(v));
}

Direction random_rational_quotient_direction(int d, int s, std::uint64_t seed) {
  if (s < 1 || s > d - 1) throw DomainError("rational quotient count must lie in 1..d-1");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::uniform_int_distribution<int> num(1, 6), den(1, 4), sign(0, 1);
  std::vector<int> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  std::shuffle(primes.begin(), primes.end(), rng);

  RationalQuotients q;
  std::vector<double> w(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const std::size_t idx = order[static_cast<std::size_t>(i)];
    const int sgn = sign(rng) ? 1 : -1;
    if (i <= s) {
      const Rational value(sgn * num(rng), den(rng));
      q.indices.push_back(idx);
      q.values.push_back(value);
      w[idx] = to_double(value);
    } else {
      // Square roots of distinct primes keep the free coordinates
      // irrational relative to each other.
      const int p = primes[static_cast<std::size_t>(i - s - 1) % primes.size()];
      w[idx] = sgn * std::sqrt(static_cast<double>(p)) / den(rng);
    }
  }
  // Sort the declared indices so describe() output is stable.
  std::vector<std::size_t> perm(q.indices.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return q.indices[a] < q.indices[b]; });
  RationalQuotients sorted;
  for (std::size_t i : perm) {
    sorted.indices.push_back(q.indices[i]);
    sorted.values.push_back(q.values[i]);
  }
  double norm2 = 0;
  for (double x : w) norm2 += x * x;
  sorted.k = std::sqrt(norm2);
  std::vector<double> v = w;
  for (auto& x : v) x /= sorted.k;
  return Direction::real(std::move(v), std::move(sorted));
}

// ---------------------------------------------------------------------------
// Sweep

std::vector<VerifyCase> verify_cases(const VerifyConfig& cfg, const SpherePointSet& pts) {
  const SphereSpec& sphere = pts.sphere();
  const int d = sphere.d;
  std::vector<std::pair<Direction, PipelineMode>> dirs;

  auto lattice = canonical_lattice_directions(pts);
  const std::size_t take = std::min(cfg.lattice_directions, lattice.size());
  for (std::size_t i = 0; i < take; ++i)
    dirs.emplace_back(Direction::rational(lattice[i * lattice.size() / take]), PipelineMode::RationalQuotients);

  for (std::size_t i = 0; i < cfg.random_directions; ++i)
    dirs.emplace_back(random_direction(d, mix(cfg.seed, 1, static_cast<std::uint64_t>(d) << 32 | i,
                                              static_cast<std::uint64_t>(sphere.n))),
                      PipelineMode::Generic);

  for (int s = 1; s <= d - 2; ++s)
    for (std::size_t i = 0; i < cfg.rational_quotient_directions; ++i)
      dirs.emplace_back(random_rational_quotient_direction(
                            d, s, mix(cfg.seed, 2, static_cast<std::uint64_t>(d) << 32 | static_cast<std::uint64_t>(s),
                                      static_cast<std::uint64_t>(sphere.n) << 20 | i)),
                        PipelineMode::RationalQuotients);

  std::vector<VerifyCase> cases;
  const Rational four_n = 4 * Rational(sphere.n);
  for (const auto& [dir, mode] : dirs) {
    for (double theta : cfg.thetas) {
      for (double inner : cfg.inner_angles) {
        const double outer = inner + theta;
        if (outer > 2 * std::numbers::pi) continue;
        const Rational rho1 = std::min(from_double(radius_from_angle(sphere, outer)), four_n);
        const Rational rho2 = from_double(radius_from_angle(sphere, inner));
        if (!(rho1 > rho2)) continue;
        cases.push_back({Segment(sphere, dir, rho1, rho2), mode});
      }
    }
  }
  return cases;
}

VerifyResult run_verify(const VerifyConfig& cfg) {
  cfg.validate();

  struct Job {
    std::size_t sphere;
    VerifyCase c;
  };
  std::vector<SpherePointSet> spheres;
  std::vector<Job> jobs;
  for (int d : cfg.dims) {
    for (std::int64_t n = cfg.n_from; n <= cfg.n_to; n += cfg.n_step) {
      spheres.push_back(enumerate_sphere(SphereSpec(d, n), cfg.enumeration_budget));
      for (auto& c : verify_cases(cfg, spheres.back())) jobs.push_back({spheres.size() - 1, std::move(c)});
    }
  }

  VerifyResult result;
  result.rows.resize(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        result.rows[i] = bound_pipeline(jobs[i].c.segment, spheres[jobs[i].sphere], jobs[i].c.mode);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, jobs.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerifySummary& s = result.summary;
  s.rows = result.rows.size();
  std::map<std::tuple<int, std::int64_t, double>, std::size_t> psi_index;
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const BoundReport& r = result.rows[i];
    if (!r.holds_exact_chain) {
      ++s.chain_failures;
      s.failed_rows.push_back(i);
    }
    double& best = s.max_ratio[r.d][r.mode];
    best = std::max(best, r.ratio_thm);

    // Opening angles of the sweep are recomputed from exact radii; key on the
    // configured value they came from.
    double theta_key = r.theta;
    for (double t : cfg.thetas)
      if (std::abs(t - r.theta) < 1e-6) theta_key = t;
    auto key = std::make_tuple(r.d, r.n, theta_key);
    auto it = psi_index.find(key);
    if (it == psi_index.end()) {
      psi_index.emplace(key, s.empirical_psi.size());
      s.empirical_psi.push_back({r.d, r.n, theta_key, r.count_S.hi, r.direction});
    } else if (r.count_S.hi > s.empirical_psi[it->second].max_count) {
      s.empirical_psi[it->second].max_count = r.count_S.hi;
      s.empirical_psi[it->second].direction = r.direction;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Output

std::string csv_row(const BoundReport& r) {
  std::ostringstream o;
  std::string a;
  for (std::size_t i = 0; i < r.a.size(); ++i) {
    if (i) a += ' ';
    a += std::to_string(r.a[i]);
  }
  o << r.d << ',' << r.n << ',' << format_float(r.theta) << ',' << to_string(r.rho1) << ','
    << to_string(r.rho2) << ',' << r.direction << ',' << r.mode << ',' << r.s << ',' << r.H << ',' << a << ','
    << format_float(r.norm_a) << ',' << format_float(r.phi_upper) << ',' << r.count_S.hi << ','
    << (r.count_S.exact() ? 1 : 0) << ',' << r.count_Sprime << ',' << r.slices_hit << ',' << r.kappa_b << ','
    << r.bound_value.str() << ',' << format_float(r.height_prime) << ',' << format_float(r.ratio_thm) << ','
    << format_float(r.ratio_cover) << ',' << (r.holds_exact_chain ? "true" : "false");
  return o.str();
}

void write_reports_csv(std::ostream& out, const std::vector<BoundReport>& rows) {
  out << kCsvVersionLine << '\n';
  out << "d,n,theta,rho1,rho2,direction,mode,s,H,a,norm_a,phi_upper,count_S,count_S_exact,count_Sprime,"
         "slices_hit,kappa_b,bound_value,height_prime,ratio_thm,ratio_cover,holds_exact_chain\n";
  for (const auto& r : rows) out << csv_row(r) << '\n';
}

std::string summary_json(const VerifySummary& s) {
  json j;
  j["version"] = "lattice-segments v1";
  j["rows"] = s.rows;
  j["chain_failures"] = s.chain_failures;
  j["failed_rows"] = s.failed_rows;
  json ratios = json::object();
  for (const auto& [d, modes] : s.max_ratio)
    for (const auto& [mode, v] : modes) ratios[std::to_string(d)][mode] = v;
  j["max_ratio_thm"] = ratios;
  json psi = json::array();
  for (const auto& e : s.empirical_psi)
    psi.push_back({{"d", e.d}, {"n", e.n}, {"theta", e.theta}, {"max_count", e.max_count}, {"direction", e.direction}});
  j["empirical_psi"] = psi;
  return j.dump(2);
}

}  // namespace latseg
