#include "latseg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

namespace latseg {

namespace {

constexpr double kUnitTolerance = 0x1p-40;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void check_rho(const SphereSpec& sphere, const Rational& rho) {
  if (rho < 0 || rho > 4 * Rational(sphere.n))
    throw DomainError("squared cap radius " + to_string(rho) + " outside [0, 4n] for n = " +
                      std::to_string(sphere.n));
}

}  // namespace

SphereSpec::SphereSpec(int dim, std::int64_t squared_radius) : d(dim), n(squared_radius) {
  if (d < 2) throw DomainError("sphere dimension must be at least 2");
  if (n < 0) throw DomainError("squared sphere radius must be non-negative");
}

// ---------------------------------------------------------------------------
// Direction

Direction Direction::rational(std::vector<std::int64_t> b) {
  std::int64_t g = gcd_of(b);
  if (g == 0) throw DomainError("direction must be a nonzero vector");
  Direction dir;
  for (auto& x : b) x /= g;
  double norm2 = 0;
  for (auto x : b) norm2 += static_cast<double>(x) * static_cast<double>(x);
  const double len = std::sqrt(norm2);
  dir.unit_.reserve(b.size());
  for (auto x : b) dir.unit_.push_back(static_cast<double>(x) / len);
  dir.normal_ = std::move(b);
  return dir;
}

Direction Direction::real(std::vector<double> v, std::optional<RationalQuotients> quotients) {
  double norm2 = 0;
  for (double x : v) {
    if (!std::isfinite(x)) throw DomainError("direction has a non-finite coordinate");
    norm2 += x * x;
  }
  if (norm2 == 0) throw DomainError("direction must be a nonzero vector");
  const double len = std::sqrt(norm2);
  for (double& x : v) x /= len;
  double check = 0;
  for (double x : v) check += x * x;
  if (std::abs(std::sqrt(check) - 1.0) > kUnitTolerance)
    throw DomainError("direction could not be normalized to unit length");

  if (quotients) {
    const auto& q = *quotients;
    if (q.indices.empty() || q.indices.size() != q.values.size())
      throw DomainError("rational quotients need matching index and value lists");
    if (q.k == 0 || !std::isfinite(q.k)) throw DomainError("rational quotients need a finite nonzero k");
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < q.indices.size(); ++i) {
      const std::size_t idx = q.indices[i];
      if (idx >= v.size() || !seen.insert(idx).second)
        throw DomainError("rational quotient index out of range or repeated");
      const double declared = to_double(q.values[i]);
      if (std::abs(q.k * v[idx] - declared) > kUnitTolerance * std::max(1.0, std::abs(declared)))
        throw DomainError("declared rational coordinate " + to_string(q.values[i]) +
                          " does not match k * v[" + std::to_string(idx) + "]");
    }
  }

  Direction dir;
  dir.unit_ = std::move(v);
  dir.quotients_ = std::move(quotients);
  return dir;
}

std::vector<Rational> Direction::exact_vector() const {
  std::vector<Rational> out;
  out.reserve(unit_.size());
  if (is_rational()) {
    for (auto x : normal_) out.emplace_back(x);
    return out;
  }
  if (!quotients_) {
    for (double x : unit_) out.push_back(from_double(x));
    return out;
  }
  const Rational k = from_double(quotients_->k);
  for (double x : unit_) out.push_back(k * from_double(x));
  for (std::size_t i = 0; i < quotients_->indices.size(); ++i)
    out[quotients_->indices[i]] = quotients_->values[i];
  // k * v points against v when k < 0.
  if (quotients_->k < 0)
    for (auto& x : out) x = -x;
  return out;
}

const std::vector<Interval>& Direction::unit_enclosure() const {
  std::call_once(enclosure_->once, [this] {
    std::vector<Interval> v;
    for (auto& r : exact_vector()) v.emplace_back(r);
    const Interval len = norm(v);
    for (auto& x : v) x /= len;
    enclosure_->value = std::move(v);
  });
  return enclosure_->value;
}

Direction Direction::negated() const {
  Direction dir = *this;
  dir.enclosure_ = std::make_shared<EnclosureCache>();
  for (auto& x : dir.normal_) x = -x;
  for (auto& x : dir.unit_) x = -x;
  if (dir.quotients_)
    for (auto& v : dir.quotients_->values) v = -v;
  return dir;
}

std::string Direction::describe() const {
  std::string s;
  if (is_rational()) {
    s = "b:";
    for (std::size_t i = 0; i < normal_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(normal_[i]);
    }
    return s;
  }
  s = "v:";
  for (std::size_t i = 0; i < unit_.size(); ++i) {
    if (i) s += ' ';
    s += format_double(unit_[i]);
  }
  if (quotients_) {
    s += " k:" + format_double(quotients_->k) + " q:";
    for (std::size_t i = 0; i < quotients_->indices.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(quotients_->indices[i]) + "=" + to_string(quotients_->values[i]);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Cap / Segment

Cap::Cap(SphereSpec sphere, Direction direction, Rational rho)
    : sphere_(sphere), direction_(std::move(direction)), rho_(std::move(rho)) {
  if (direction_.dimension() != sphere_.d) throw DomainError("cap direction has the wrong dimension");
  check_rho(sphere_, rho_);
}

Segment::Segment(SphereSpec sphere, Direction direction, Rational rho1, Rational rho2)
    : sphere_(sphere), direction_(std::move(direction)), rho1_(std::move(rho1)), rho2_(std::move(rho2)) {
  if (direction_.dimension() != sphere_.d) throw DomainError("segment direction has the wrong dimension");
  check_rho(sphere_, rho1_);
  check_rho(sphere_, rho2_);
  if (!(rho1_ > rho2_)) throw DomainError("segment needs rho1 > rho2");
}

double Segment::opening_angle() const {
  return angle_from_radius(sphere_, rho1_) - angle_from_radius(sphere_, rho2_);
}

// ---------------------------------------------------------------------------
// Conversions

double radius_from_angle(const SphereSpec& sphere, double theta) {
  if (!(theta >= 0 && theta <= 2 * std::numbers::pi))
    throw DomainError("opening angle must lie in [0, 2 pi]");
  const double s = std::sin(theta / 4);
  return 4.0 * static_cast<double>(sphere.n) * s * s;
}

double angle_from_radius(const SphereSpec& sphere, const Rational& rho) {
  check_rho(sphere, rho);
  if (rho == 0) return 0.0;
  const double ratio = std::sqrt(to_double(rho / (4 * Rational(sphere.n))));
  return 4.0 * std::asin(std::min(1.0, ratio));
}

SegmentHeight segment_height(const Segment& seg) {
  const Rational diff = seg.rho1() - seg.rho2();
  SegmentHeight h;
  h.squared = diff * diff / (4 * Rational(seg.sphere().n));
  h.value = std::sqrt(to_double(h.squared));
  return h;
}

Rational base_radius_squared(const SphereSpec& sphere, const Rational& rho) {
  check_rho(sphere, rho);
  if (sphere.n == 0) return Rational(0);
  return rho - rho * rho / (4 * Rational(sphere.n));
}

Rational plane_offset(const SphereSpec& sphere, const Rational& rho) {
  check_rho(sphere, rho);
  return Rational(sphere.n) - rho / 2;
}

}  // namespace latseg
