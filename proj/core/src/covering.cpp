#include "latseg/covering.hpp"

#include <cmath>
#include <limits>

namespace latseg {

namespace {

constexpr unsigned kRadiusGridBits = 64;

Rational round_up_to_grid(const Rational& x) {
  const Rational scale(Integer(1) << kRadiusGridBits);
  return Rational(ceil(x * scale)) / scale;
}

Rational round_down_to_grid(const Rational& x) {
  const Rational scale(Integer(1) << kRadiusGridBits);
  return Rational(floor(x * scale)) / scale;
}

std::vector<std::int64_t> primitive(std::span<const std::int64_t> a) {
  const std::int64_t g = gcd_of(a);
  if (g == 0) throw DomainError("covering direction must be nonzero");
  std::vector<std::int64_t> out(a.begin(), a.end());
  for (auto& x : out) x /= g;
  return out;
}

// Integer direction of a vector whose coordinates are all rational.
std::vector<std::int64_t> integer_direction(const std::vector<Rational>& w) {
  Integer l = 1;
  for (const Rational& x : w) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
  std::vector<std::int64_t> b;
  for (const Rational& x : w) b.push_back(to_int64(boost::multiprecision::numerator(x * l)));
  return primitive(b);
}

}  // namespace

Segment CoveringSegment::as_segment() const {
  return Segment(original.sphere(), Direction::rational(a), rho1_prime, rho2_prime);
}

Cap CoveringSegment::outer_cap() const { return Cap(original.sphere(), Direction::rational(a), rho1_prime); }

CoveringSegment build_covering(const Segment& seg, std::span<const std::int64_t> a_in) {
  if (static_cast<int>(a_in.size()) != seg.sphere().d) throw DomainError("covering direction has the wrong dimension");
  CoveringSegment cov{seg, primitive(a_in), Rational(0), seg.rho1(), seg.rho2(), false};

  if (positively_parallel(seg.direction(), cov.a)) return cov;

  const Interval dist = direction_distance(seg.direction(), cov.a);
  cov.sin_half_phi_upper = round_up_to_grid(dist.hi() / 2);

  const Rational four_n = 4 * Rational(seg.sphere().n);
  const Interval shift = Interval(2) * sqrt(Interval(seg.sphere().n)) * Interval(cov.sin_half_phi_upper);

  // r_1' = r_1 + 2R s_bar, rounded up.
  const Rational outer = round_up_to_grid((sqrt(Interval(seg.rho1())) + shift).hi());
  cov.rho1_prime = std::min(outer * outer, four_n);

  // r_2' = r_2 - 2R s_bar, rounded down; a non-positive value drops T'_2.
  const Rational inner = round_down_to_grid((sqrt(Interval(seg.rho2())) - shift).lo());
  if (inner <= 0) {
    cov.inner_cap_empty = true;
    cov.rho2_prime = 0;
  } else {
    cov.rho2_prime = inner * inner;
  }
  return cov;
}

Verdict covering_contains(const CoveringSegment& cov, LatticePoint x) {
  if (cov.inner_cap_empty) return cap_contains(cov.outer_cap(), x);
  return segment_contains(cov.as_segment(), x);
}

std::size_t count_covering(const CoveringSegment& cov, const SpherePointSet& pts) {
  if (cov.inner_cap_empty) return count_cap(cov.outer_cap(), pts).lo;
  return count_segment(cov.as_segment(), pts).lo;
}

HeightBound height_bound(const CoveringSegment& cov) {
  const Rational diff = cov.rho1_prime - cov.rho2_prime;
  const std::int64_t n = cov.original.sphere().n;
  HeightBound h;
  h.squared = diff * diff / (4 * Rational(n));
  h.value = std::sqrt(to_double(h.squared));
  const double phi = 2.0 * std::asin(std::min(1.0, to_double(cov.sin_half_phi_upper)));
  const double scale = std::sqrt(static_cast<double>(n)) * (cov.original.opening_angle() + phi);
  h.ratio_to_r_theta_phi = scale > 0 ? h.value / scale : std::numeric_limits<double>::infinity();
  return h;
}

std::int64_t covering_slices_hit(const CoveringSegment& cov) {
  const SphereSpec& sphere = cov.original.sphere();
  const Integer lo = scaled_offset_bounds(sphere, cov.a, cov.rho1_prime).ceil;
  const Integer hi = scaled_offset_bounds(sphere, cov.a, cov.rho2_prime).floor;
  return hi < lo ? 0 : to_int64(hi - lo + 1);
}

const char* to_string(PipelineMode mode) {
  return mode == PipelineMode::Generic ? "generic" : "rational_quotients";
}

std::int64_t choose_H(double theta, int exponent) {
  if (!(theta > 0)) throw DomainError("opening angle must be positive to choose H");
  if (exponent < 1) throw DomainError("H exponent must be at least 1");
  const double h = std::ceil(std::pow(theta, -1.0 / exponent));
  if (!(h < 1e15)) throw BudgetError("opening angle too small for a tractable H");
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(h));
}

BoundReport bound_pipeline(const Segment& seg, const SpherePointSet& pts, PipelineMode mode,
                           std::optional<std::int64_t> H_override) {
  if (!(pts.sphere() == seg.sphere())) throw DomainError("point set belongs to a different sphere");
  const int d = seg.sphere().d;
  const Direction& dir = seg.direction();

  BoundReport r;
  r.d = d;
  r.n = seg.sphere().n;
  r.theta = seg.opening_angle();
  r.rho1 = seg.rho1();
  r.rho2 = seg.rho2();
  r.direction = dir.describe();

  std::vector<std::int64_t> a;
  const bool fully_rational = dir.is_rational() || (dir.quotients() && dir.quotients()->s() == d - 1);
  if (mode == PipelineMode::RationalQuotients && fully_rational) {
    // Direction proportional to an integer vector: no approximation needed.
    r.mode = "exact";
    r.s = d - 1;
    r.H = 0;
    a = dir.is_rational() ? std::vector<std::int64_t>(dir.normal().begin(), dir.normal().end())
                          : integer_direction(dir.exact_vector());
  } else if (mode == PipelineMode::RationalQuotients) {
    if (!dir.quotients()) throw DomainError("rational_quotients mode needs a direction with declared quotients");
    r.mode = "rational_quotients";
    r.s = dir.quotients()->s();
    r.H = H_override.value_or(choose_H(r.theta, d - r.s));
    a = approx_direction_rational_quotients(dir, r.H).a;
  } else {
    r.mode = "generic";
    r.s = 0;
    r.H = H_override.value_or(choose_H(r.theta, d));
    a = approx_direction(dir, r.H).a;
  }

  const CoveringSegment cov = build_covering(seg, a);
  r.a = cov.a;
  double a2 = 0;
  for (auto x : cov.a) a2 += static_cast<double>(x) * static_cast<double>(x);
  r.norm_a = std::sqrt(a2);
  r.phi_upper = 2.0 * std::asin(std::min(1.0, to_double(cov.sin_half_phi_upper)));

  const CapTest outer(seg.outer());
  const CapTest inner(seg.inner());
  const CapTest cover_outer(cov.outer_cap());
  const std::optional<CapTest> cover_inner =
      cov.inner_cap_empty ? std::nullopt : std::optional<CapTest>(CapTest(cov.as_segment().inner()));

  r.containment = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto x = pts[i];
    const Verdict vo = outer(x);
    const Verdict vi = vo == Verdict::Outside ? Verdict::Inside : inner(x);
    const bool maybe_in_s = vo != Verdict::Outside && vi != Verdict::Inside;
    if (maybe_in_s) {
      ++r.count_S.hi;
      if (vo == Verdict::Inside && vi == Verdict::Outside) ++r.count_S.lo;
    }
    const bool in_cover = cover_outer(x) == Verdict::Inside && (!cover_inner || (*cover_inner)(x) == Verdict::Outside);
    if (in_cover) ++r.count_Sprime;
    if (maybe_in_s && !in_cover) r.containment = false;
  }

  r.slices_hit = covering_slices_hit(cov);
  r.kappa_b = slice(pts, cov.a).max_count();
  const HeightBound hb = height_bound(cov);
  r.height_prime = hb.value;
  Integer A = 0;
  for (auto x : cov.a) A += Integer(x) * x;
  const Integer ceil_ah = ceil_sqrt(Rational(A) * hb.squared);
  r.bound_value = Integer(r.kappa_b) * (1 + ceil_ah);

  const Integer finite_form = Integer(r.kappa_b) * r.slices_hit;
  r.holds_exact_chain = r.containment && r.count_S.hi <= r.count_Sprime &&
                        Integer(r.count_Sprime) <= finite_form && finite_form <= r.bound_value;

  const double denom = static_cast<double>(r.kappa_b) *
                       (1.0 + std::sqrt(static_cast<double>(r.n)) * std::pow(r.theta, 1.0 / (d - r.s)));
  r.ratio_thm = r.count_S.hi == 0 ? 0.0 : static_cast<double>(r.count_S.hi) / denom;
  const double cover_denom = static_cast<double>(r.kappa_b) *
                             (1.0 + std::sqrt(static_cast<double>(r.n)) * r.norm_a * (r.theta + r.phi_upper));
  r.ratio_cover = r.count_S.hi == 0 ? 0.0 : static_cast<double>(r.count_S.hi) / cover_denom;
  return r;
}

}  // namespace latseg
