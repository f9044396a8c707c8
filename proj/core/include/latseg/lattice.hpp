// Integer points on R S^{d-1} and exact membership in caps and segments.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "latseg/geometry.hpp"

namespace latseg {

/// A point of Z^d viewed in place.
using LatticePoint = std::span<const std::int64_t>;

/// The sorted, duplicate-free set {x in Z^d : |x|^2 = n}, stored flat.
class SpherePointSet {
 public:
  SpherePointSet() = default;
  /// Takes row-major coordinates; validates |x|^2 = n and strict
  /// lexicographic order.
  SpherePointSet(SphereSpec sphere, std::vector<std::int64_t> coords);

  const SphereSpec& sphere() const { return sphere_; }
  std::size_t size() const { return sphere_.d ? coords_.size() / static_cast<std::size_t>(sphere_.d) : 0; }
  bool empty() const { return coords_.empty(); }
  LatticePoint operator[](std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(sphere_.d), static_cast<std::size_t>(sphere_.d)};
  }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  friend bool operator==(const SpherePointSet&, const SpherePointSet&) = default;

 private:
  SphereSpec sphere_;
  std::vector<std::int64_t> coords_;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000'000ULL;

/// All lattice points on the sphere. Recursive coordinate descent over the
/// first d-2 coordinates, with the last two read from a table of two-square
/// decompositions. Throws BudgetError when the projected number of search
/// nodes exceeds `budget`.
SpherePointSet enumerate_sphere(const SphereSpec& sphere, std::uint64_t budget = kDefaultEnumerationBudget);

bool is_primitive(LatticePoint x);

enum class Verdict { Outside, Inside, Uncertain };

const char* to_string(Verdict v);

/// Membership of a sphere point in a cap. Exact for rational directions;
/// real directions are decided by an outward-rounded enclosure and answer
/// Uncertain only when the enclosure straddles the cap boundary.
Verdict cap_contains(const Cap& cap, LatticePoint x);

/// cap_contains(outer) and not cap_contains(inner), with uncertainty
/// propagated.
Verdict segment_contains(const Segment& seg, LatticePoint x);

/// Floor and ceiling of the scaled base-plane offset tau = |b| c / sqrt(n),
/// c = n - rho/2, for an integer normal b. A sphere point x lies in the cap
/// of direction b and squared radius rho exactly when b . x >= tau.
struct OffsetBounds {
  Integer floor;
  Integer ceil;
};
OffsetBounds scaled_offset_bounds(const SphereSpec& sphere, std::span<const std::int64_t> b, const Rational& rho);

namespace detail {
class EnclosedCap;
}

/// Precomputed membership test for one cap, used for bulk counting.
class CapTest {
 public:
  explicit CapTest(const Cap& cap);
  Verdict operator()(LatticePoint x) const;

 private:
  bool rational_ = false;
  std::vector<std::int64_t> normal_;
  std::int64_t threshold_ = 0;  // rational: inside iff b . x >= threshold_

  std::vector<double> unit_;
  std::shared_ptr<const detail::EnclosedCap> enclosed_;  // certified fallback
  double offset_d_ = 0;
  double sqrt_n_d_ = 0;
  double margin_ = 0;
};

/// Count of a segment's lattice points; lo < hi only when some membership
/// verdict was Uncertain.
struct CountResult {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool exact() const { return lo == hi; }
  friend bool operator==(const CountResult&, const CountResult&) = default;
};

CountResult count_segment(const Segment& seg, const SpherePointSet& pts);
CountResult count_cap(const Cap& cap, const SpherePointSet& pts);

/// Text format: header "d n count", then one space-separated point per line.
void write_point_set(std::ostream& out, const SpherePointSet& pts);
SpherePointSet read_point_set(std::istream& in);

}  // namespace latseg
