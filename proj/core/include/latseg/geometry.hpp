// Spheres, directions, caps and segments, plus the conversions between
// opening angles, cap radii, base hyperplanes and segment heights.
//
// All radii are carried SQUARED and as exact rationals. The sphere radius
// R = sqrt(n) is never stored; quantities that involve R are expressed as a
// rational numerator over sqrt(n).
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latseg/numeric.hpp"

namespace latseg {

/// The sphere R S^{d-1} with R^2 = n.
struct SphereSpec {
  int d = 2;
  std::int64_t n = 0;

  SphereSpec() = default;
  SphereSpec(int dim, std::int64_t squared_radius);

  friend bool operator==(const SphereSpec&, const SphereSpec&) = default;
};

/// Declared exactly-rational coordinates of k * beta for a real direction.
/// `indices[i]` is the coordinate whose value in k * beta is `values[i]`.
struct RationalQuotients {
  double k = 1.0;
  std::vector<std::size_t> indices;
  std::vector<Rational> values;

  /// Number of rational quotients s (one less than the number of rational
  /// coordinates).
  int s() const { return static_cast<int>(indices.size()) - 1; }
};

/// Direction of a cap: either an exact primitive integer normal b, or a
/// unit floating-point vector v (optionally carrying rational quotients).
///
/// The mathematical unit direction is exact_vector() / |exact_vector()|:
///  - rational: b;
///  - real: the stored doubles v, read as exact binary fractions;
///  - real with quotients: the declared fractions at the masked indices and
///    k * v_i (exact double product) elsewhere.
class Direction {
 public:
  /// Integer direction; divided by the gcd of its entries. Throws on zero.
  static Direction rational(std::vector<std::int64_t> b);
  /// Real direction; v is normalized to unit length. Throws on zero or
  /// non-finite input, or when quotient values disagree with k * v by more
  /// than 2^-40.
  static Direction real(std::vector<double> v, std::optional<RationalQuotients> quotients = {});

  int dimension() const { return static_cast<int>(unit_.size()); }
  bool is_rational() const { return !normal_.empty(); }

  /// Primitive integer normal (empty for real directions).
  std::span<const std::int64_t> normal() const { return normal_; }
  /// Unit vector in double precision (for reporting and fast filters).
  std::span<const double> unit() const { return unit_; }
  const std::optional<RationalQuotients>& quotients() const { return quotients_; }

  std::vector<Rational> exact_vector() const;
  /// Enclosure of the mathematical unit direction, computed on first use
  /// and shared between copies.
  const std::vector<Interval>& unit_enclosure() const;

  Direction negated() const;
  std::string describe() const;

 private:
  std::vector<std::int64_t> normal_;
  std::vector<double> unit_;
  std::optional<RationalQuotients> quotients_;
  struct EnclosureCache {
    std::once_flag once;
    std::vector<Interval> value;
  };
  std::shared_ptr<EnclosureCache> enclosure_ = std::make_shared<EnclosureCache>();
};

/// T = R S^{d-1} intersected with the closed ball of squared radius rho
/// around R beta.
class Cap {
 public:
  Cap(SphereSpec sphere, Direction direction, Rational rho);

  const SphereSpec& sphere() const { return sphere_; }
  const Direction& direction() const { return direction_; }
  const Rational& rho() const { return rho_; }

 private:
  SphereSpec sphere_;
  Direction direction_;
  Rational rho_;
};

/// S = T_1 \ T_2 for two caps of the same direction, rho1 > rho2 >= 0.
class Segment {
 public:
  Segment(SphereSpec sphere, Direction direction, Rational rho1, Rational rho2);

  const SphereSpec& sphere() const { return sphere_; }
  const Direction& direction() const { return direction_; }
  const Rational& rho1() const { return rho1_; }
  const Rational& rho2() const { return rho2_; }

  Cap outer() const { return Cap(sphere_, direction_, rho1_); }
  Cap inner() const { return Cap(sphere_, direction_, rho2_); }

  /// Opening angle theta_1 - theta_2 (float convenience value).
  double opening_angle() const;

 private:
  SphereSpec sphere_;
  Direction direction_;
  Rational rho1_;
  Rational rho2_;
};

/// Squared cap radius 4 n sin^2(theta / 4) for 0 <= theta <= 2 pi.
double radius_from_angle(const SphereSpec& sphere, double theta);

/// Opening angle 4 asin(sqrt(rho) / (2 sqrt(n))) for 0 <= rho <= 4n.
double angle_from_radius(const SphereSpec& sphere, const Rational& rho);

struct SegmentHeight {
  Rational squared;  ///< h^2 = (rho1 - rho2)^2 / (4n), exact
  double value;      ///< sqrt(h^2)
};

SegmentHeight segment_height(const Segment& seg);

/// Squared radius rho - rho^2 / (4n) of the cap's base (d-2)-sphere.
Rational base_radius_squared(const SphereSpec& sphere, const Rational& rho);

/// c = n - rho / 2; the base hyperplane is beta . x = c / sqrt(n).
Rational plane_offset(const SphereSpec& sphere, const Rational& rho);

}  // namespace latseg
