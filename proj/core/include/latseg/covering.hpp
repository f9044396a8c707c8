// Covering an arbitrary segment by one of rational direction, and the
// end-to-end counting bound built on it.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latseg/diophantine.hpp"
#include "latseg/lattice.hpp"
#include "latseg/slicing.hpp"

namespace latseg {

/// S' = T'_1 \ T'_2 of direction a with S contained in S'.
///
/// sin(phi/2) = |beta - a/|a|| / 2 is replaced by a rational upper bound
/// s_bar. The outer radius is enlarged to (r_1 + 2R s_bar)^2 (rounded up,
/// capped at the diameter) and the inner one shrunk to (r_2 - 2R s_bar)^2
/// (rounded down). When r_2 <= 2R s_bar the inner cap is dropped entirely
/// and S' is the whole cap T'_1.
struct CoveringSegment {
  Segment original;
  std::vector<std::int64_t> a;  ///< primitive direction of S'
  Rational sin_half_phi_upper;
  Rational rho1_prime;
  Rational rho2_prime;          ///< 0 when inner_cap_empty
  bool inner_cap_empty = false;

  /// S' as a Segment (rho2' = 0 when the inner cap is empty; use
  /// covering_contains / count_covering, which honour the flag).
  Segment as_segment() const;
  Cap outer_cap() const;
};

CoveringSegment build_covering(const Segment& seg, std::span<const std::int64_t> a);

Verdict covering_contains(const CoveringSegment& cov, LatticePoint x);
std::size_t count_covering(const CoveringSegment& cov, const SpherePointSet& pts);

struct HeightBound {
  Rational squared;  ///< h'^2 = (rho1' - rho2')^2 / (4n), exact
  double value = 0;
  double ratio_to_r_theta_phi = 0;  ///< h' / (R (theta + phi_upper))
};

HeightBound height_bound(const CoveringSegment& cov);

/// Number of integer offsets t = a . x in the closed slab of S'.
std::int64_t covering_slices_hit(const CoveringSegment& cov);

enum class PipelineMode { Generic, RationalQuotients };

const char* to_string(PipelineMode mode);

struct BoundReport {
  int d = 0;
  std::int64_t n = 0;
  double theta = 0;
  Rational rho1;
  Rational rho2;
  std::string direction;
  std::string mode;  ///< generic | rational_quotients | exact
  int s = 0;         ///< rational quotients used for the exponent
  std::int64_t H = 0;
  std::vector<std::int64_t> a;
  double norm_a = 0;
  double phi_upper = 0;
  CountResult count_S;
  std::size_t count_Sprime = 0;
  std::int64_t slices_hit = 0;
  std::size_t kappa_b = 0;
  Integer bound_value = 0;  ///< kappa_b (1 + ceil(|a| h'))
  double height_prime = 0;
  double ratio_thm = 0;     ///< count_S / (kappa_b (1 + R theta^(1/(d-s))))
  double ratio_cover = 0;   ///< count_S / (kappa_b (1 + R |a| (theta + phi_upper)))
  bool containment = false; ///< every possible point of S lies in S'
  bool holds_exact_chain = false;
};

/// Chooses H from the opening angle (H = ceil(theta^(-1/(d-s)))), picks the
/// approximating integer direction, builds S', slices it and evaluates
///   count(S) <= count(S') <= kappa_b * slices_hit <= kappa_b (1 + ceil(|a| h'))
/// exactly. A rational direction (or one whose every coordinate is declared
/// rational) in RationalQuotients mode skips the approximation and uses its
/// own normal.
BoundReport bound_pipeline(const Segment& seg, const SpherePointSet& pts, PipelineMode mode,
                           std::optional<std::int64_t> H_override = std::nullopt);

/// H = ceil(theta^(-1/exponent)), at least 1.
std::int64_t choose_H(double theta, int exponent);

}  // namespace latseg
