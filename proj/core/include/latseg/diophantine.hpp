// Simultaneous Diophantine approximation and rational approximation of
// directions, with certified bounds.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "latseg/geometry.hpp"

namespace latseg {

/// Integers q, p_1..p_m with 1 <= q <= H^m and |xi_i - p_i/q| <= 1/(qH).
struct DirichletResult {
  std::int64_t q = 1;
  std::vector<std::int64_t> p;
  std::int64_t H = 1;
  Interval max_error;  ///< enclosure of max_i |q xi_i - p_i|
};

/// Smallest q in 1..H^m (p_i the nearest integer to q xi_i, halves rounded
/// away from zero) satisfying max_i |q xi_i - p_i| <= 1/H.
///
/// The search runs in double precision with a safety margin; accepted and
/// borderline candidates are re-decided on the enclosures. Throws
/// PrecisionError when an enclosure is too wide to decide a candidate, and
/// BudgetError when H^m exceeds `max_q`.
DirichletResult dirichlet_approx(std::span<const Interval> xi, std::int64_t H,
                                 std::int64_t max_q = 4'000'000'000LL);

/// Independent re-check of the Dirichlet inequality on the enclosures.
bool verify_dirichlet(std::span<const Interval> xi, const DirichletResult& r);

struct NormalizedDifference {
  Interval lhs;  ///< | alpha/|alpha| - beta/|beta| |
  Interval rhs;  ///< 2 |alpha - beta| / |alpha|
  bool holds = false;
};

/// Certified check of |alpha/|alpha| - beta/|beta|| <= 2 |alpha - beta| / |alpha|.
NormalizedDifference normalized_difference_bound(std::span<const Rational> alpha, std::span<const Rational> beta);
NormalizedDifference normalized_difference_bound(std::span<const double> alpha, std::span<const double> beta);

/// Integer vector a approximating a direction beta, with certified bounds
///   |a| <= norm_constant * H^exponent
///   |beta - a/|a|| <= angle_constant / (|a| H).
struct DirectionApproximation {
  std::vector<std::int64_t> a;
  std::int64_t H = 1;
  int exponent = 0;
  std::int64_t q = 1;  ///< common denominator (q' m for rational quotients)
  Interval norm;       ///< |a|
  Interval angle;      ///< |beta - a/|a|| = 2 sin(phi/2)
  Interval norm_constant;
  Interval angle_constant;
  Interval norm_bound;   ///< norm_constant * H^exponent
  Interval angle_bound;  ///< angle_constant / (|a| H)
  bool norm_certified = false;
  bool angle_certified = false;
  /// Intermediate bounds from the construction: |a| <= C q and the angle
  /// bound before |a| is substituted for q.
  bool q_bounds_certified = false;

  bool certified() const { return norm_certified && angle_certified && q_bounds_certified; }
};

/// Approximation through the largest coordinate: xi_i = beta_i / beta_j for
/// the (lowest-index) j with |beta_j| maximal, Dirichlet on the d-1 ratios,
/// a = q at j and p_i elsewhere, sign matching beta_j. Bounds use
/// constants sqrt(4d-3) and 2 sqrt(4d^2 - 7d + 3) with exponent d-1.
DirectionApproximation approx_direction(const Direction& beta, std::int64_t H);

/// Variant for a direction with s rational quotients, 1 <= s <= d-2:
/// Dirichlet on the d-1-s irrational coordinates of k beta (q' <= H^(d-1-s)),
/// m = product of the reduced denominators, q = q' m. Bounds use constants
/// (1+|k|) d m and 2 (1+|k|) d m sqrt(d-1-s) / |k| with exponent d-1-s.
DirectionApproximation approx_direction_rational_quotients(const Direction& beta, std::int64_t H);

/// Enclosure of |beta - a/|a|| for the direction's exact unit vector.
Interval direction_distance(const Direction& beta, std::span<const std::int64_t> a);

/// True when a is a positive multiple of the exact direction vector.
bool positively_parallel(const Direction& beta, std::span<const std::int64_t> a);

}  // namespace latseg
