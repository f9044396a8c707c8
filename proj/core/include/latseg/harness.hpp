// Experiment configuration, the verification sweep, and report output.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "latseg/covering.hpp"

namespace latseg {

inline constexpr const char* kCsvVersionLine = "# lattice-segments v1";

/// Parameters of the `verify` sweep. Parsed from JSON; see README for the
/// schema.
struct VerifyConfig {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::vector<int> dims{3, 4};
  std::int64_t n_from = 100;
  std::int64_t n_to = 2000;
  std::int64_t n_step = 100;
  std::vector<double> thetas{0.05, 0.1, 0.2};
  std::vector<double> inner_angles{0.0, 0.5, 1.0};
  /// Lattice-point directions per sphere (canonical representatives up to
  /// signed permutations, evenly subsampled when there are more).
  std::size_t lattice_directions = 8;
  std::size_t random_directions = 4;
  /// Sampled directions per admissible s in 1..d-2.
  std::size_t rational_quotient_directions = 2;
  std::size_t threads = 0;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  std::string csv_path;
  std::string summary_path;

  /// Throws DomainError on empty ranges, or when a randomized sampler is
  /// enabled without a seed.
  void validate() const;
};

VerifyConfig parse_verify_config(std::string_view json_text);

/// One segment instance of the sweep.
struct VerifyCase {
  Segment segment;
  PipelineMode mode;
};

/// The deterministic list of instances for one sphere.
std::vector<VerifyCase> verify_cases(const VerifyConfig& cfg, const SpherePointSet& pts);

/// Canonical lattice directions: primitive parts of points with
/// x_0 >= x_1 >= ... >= 0, deduplicated and sorted.
std::vector<std::vector<std::int64_t>> canonical_lattice_directions(const SpherePointSet& pts);

/// Seeded random unit direction in dimension d.
Direction random_direction(int d, std::uint64_t seed);

/// Seeded direction with exactly s rational quotients: s+1 coordinates of
/// k beta are small fractions, the rest are irrational multiples.
Direction random_rational_quotient_direction(int d, int s, std::uint64_t seed);

struct VerifySummary {
  std::size_t rows = 0;
  std::size_t chain_failures = 0;
  std::vector<std::size_t> failed_rows;
  /// max ratio_thm keyed by d, then by mode.
  std::map<int, std::map<std::string, double>> max_ratio;
  struct PsiEntry {
    int d;
    std::int64_t n;
    double theta;
    std::size_t max_count;
    std::string direction;
  };
  /// Largest count over the sampled segments for each (d, n, theta).
  std::vector<PsiEntry> empirical_psi;
};

struct VerifyResult {
  std::vector<BoundReport> rows;
  VerifySummary summary;
};

/// Runs the pipeline over every case of the grid. Rows come back in the
/// deterministic case order regardless of the thread count.
VerifyResult run_verify(const VerifyConfig& cfg);

void write_reports_csv(std::ostream& out, const std::vector<BoundReport>& rows);
std::string csv_row(const BoundReport& r);
std::string summary_json(const VerifySummary& s);

/// Deterministic "%.10g" formatting used in every report.
std::string format_float(double x);

}  // namespace latseg
