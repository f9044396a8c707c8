// Slicing sphere point sets by parallel rational hyperplanes b . x = t.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "latseg/lattice.hpp"

namespace latseg {

/// Number of sphere points on each hyperplane b . x = t.
struct SliceHistogram {
  std::vector<std::int64_t> normal;            ///< primitive
  std::map<std::int64_t, std::size_t> buckets;  ///< ascending t
  bool normalized = false;                      ///< caller's b was divided by its gcd

  std::size_t max_count() const;
  std::size_t total() const;
};

/// Groups points by b . x. A non-primitive b is divided by its gcd and the
/// histogram is flagged `normalized`.
SliceHistogram slice(const SpherePointSet& pts, std::span<const std::int64_t> b);

/// Number of integers t in the closed slab between the segment's two base
/// planes, [ceil(tau_1), floor(tau_2)] with tau_i = |b| c_i / sqrt(n).
/// Never exceeds 1 + floor(|b| h).
std::int64_t count_slices_hit(const Segment& seg);

struct KappaWitness {
  std::vector<std::int64_t> normal;
  std::int64_t offset = 0;
  friend bool operator==(const KappaWitness&, const KappaWitness&) = default;
};

/// Lower bound for the largest number of sphere points on one rational
/// hyperplane, from a sweep over all primitive normals with
/// |b|^2 <= max_normal_norm^2 (one of each pair +-b).
struct KappaEstimate {
  std::size_t value = 0;
  std::vector<KappaWitness> witnesses;  ///< all (b, t) reaching value, sorted
  std::int64_t candidate_bound = 0;
  std::size_t normals_swept = 0;
};

inline constexpr std::uint64_t kDefaultSweepBudget = 50'000'000ULL;

KappaEstimate kappa_estimate(const SpherePointSet& pts, std::int64_t max_normal_norm,
                             std::uint64_t budget = kDefaultSweepBudget);

/// Every primitive normal with |b| <= max_norm whose first nonzero entry is
/// positive, in lexicographic order.
std::vector<std::vector<std::int64_t>> primitive_normals(int d, std::int64_t max_norm,
                                                         std::uint64_t budget = kDefaultSweepBudget);

/// ceil(|b| h) for a segment of rational direction b, exact.
Integer ceil_normal_times_height(const Segment& seg);

struct SlicingBoundReport {
  std::size_t count = 0;           ///< lattice points in the segment
  std::size_t kappa_b = 0;         ///< largest slice for the segment's normal
  std::size_t kappa_global = 0;    ///< swept lower bound for kappa_d(R)
  std::int64_t slices_hit = 0;
  Integer ceil_bh = 0;             ///< ceil(|b| h)
  Integer bound = 0;               ///< kappa_b (1 + ceil(|b| h))
  Integer bound_global = 0;        ///< kappa_global (1 + ceil(|b| h))
  bool holds = false;              ///< count <= kappa_b * slices_hit <= bound
};

/// Checks the slicing inequality count <= kappa (1 + |b| h) for a segment of
/// rational direction. `kappa` must come from a sweep that covered the
/// segment's normal.
SlicingBoundReport check_slicing_bound(const Segment& seg, const SpherePointSet& pts, const KappaEstimate& kappa);

/// CSV with columns normal,t,count (normal entries space-separated).
void write_histogram_csv(std::ostream& out, const SliceHistogram& hist);

}  // namespace latseg
