#include "latseg/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace latseg {

namespace {

std::int64_t isqrt64(std::int64_t m) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

std::int64_t squared_norm(LatticePoint x) {
  std::int64_t s = 0;
  for (auto v : x) s += v * v;
  return s;
}

// Nonnegative solutions (x, y) of x^2 + y^2 = m for every m <= n, in CSR form.
class TwoSquareTable {
 public:
  explicit TwoSquareTable(std::int64_t n) : offsets_(static_cast<std::size_t>(n) + 2, 0) {
    const std::int64_t r = isqrt64(n);
    for (std::int64_t x = 0; x <= r; ++x)
      for (std::int64_t y = 0; x * x + y * y <= n; ++y) ++offsets_[static_cast<std::size_t>(x * x + y * y) + 1];
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    pairs_.resize(offsets_.back());
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::int64_t x = 0; x <= r; ++x)
      for (std::int64_t y = 0; x * x + y * y <= n; ++y)
        pairs_[fill[static_cast<std::size_t>(x * x + y * y)]++] = {static_cast<std::int32_t>(x),
                                                                  static_cast<std::int32_t>(y)};
  }

  std::span<const std::pair<std::int32_t, std::int32_t>> operator[](std::int64_t m) const {
    const auto i = static_cast<std::size_t>(m);
    return {pairs_.data() + offsets_[i], pairs_.data() + offsets_[i + 1]};
  }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs_;
};

// Signed, lexicographically sorted solutions of x^2 + y^2 = m.
void signed_pairs(std::span<const std::pair<std::int32_t, std::int32_t>> base,
                  std::vector<std::pair<std::int64_t, std::int64_t>>& out) {
  out.clear();
  for (auto [x, y] : base) {
    for (int sx : {-1, 1}) {
      if (x == 0 && sx < 0) continue;
      for (int sy : {-1, 1}) {
        if (y == 0 && sy < 0) continue;
        out.emplace_back(sx * x, sy * y);
      }
    }
  }
  std::sort(out.begin(), out.end());
}

class Enumerator {
 public:
  Enumerator(int d, std::int64_t n, std::vector<std::int64_t>& out) : d_(d), table_(n), prefix_(d), out_(out) {}

  void run(std::int64_t n) { descend(0, n); }

 private:
  void descend(int depth, std::int64_t remaining) {
    if (depth == d_ - 2) {
      signed_pairs(table_[remaining], leaf_);
      for (auto [x, y] : leaf_) {
        out_.insert(out_.end(), prefix_.begin(), prefix_.begin() + depth);
        out_.push_back(x);
        out_.push_back(y);
      }
      return;
    }
    const std::int64_t r = isqrt64(remaining);
    for (std::int64_t x = -r; x <= r; ++x) {
      prefix_[static_cast<std::size_t>(depth)] = x;
      descend(depth + 1, remaining - x * x);
    }
  }

  int d_;
  TwoSquareTable table_;
  std::vector<std::int64_t> prefix_;
  std::vector<std::pair<std::int64_t, std::int64_t>> leaf_;
  std::vector<std::int64_t>& out_;
};

}  // namespace

// ---------------------------------------------------------------------------
// SpherePointSet

SpherePointSet::SpherePointSet(SphereSpec sphere, std::vector<std::int64_t> coords)
    : sphere_(sphere), coords_(std::move(coords)) {
  const auto d = static_cast<std::size_t>(sphere_.d);
  if (coords_.size() % d != 0) throw DomainError("point coordinates are not a multiple of d");
  for (std::size_t i = 0; i < size(); ++i) {
    if (squared_norm((*this)[i]) != sphere_.n) throw DomainError("point is not on the sphere");
    if (i > 0) {
      auto prev = (*this)[i - 1];
      auto cur = (*this)[i];
      if (!std::lexicographical_compare(prev.begin(), prev.end(), cur.begin(), cur.end()))
        throw DomainError("points are not strictly increasing");
    }
  }
}

SpherePointSet enumerate_sphere(const SphereSpec& sphere, std::uint64_t budget) {
  const int d = sphere.d;
  const std::int64_t n = sphere.n;
  std::vector<std::int64_t> coords;

  if (d == 2) {
    const std::int64_t r = isqrt64(n);
    for (std::int64_t x = -r; x <= r; ++x) {
      const std::int64_t y = isqrt64(n - x * x);
      if (y * y != n - x * x) continue;
      if (y == 0) {
        coords.insert(coords.end(), {x, 0});
      } else {
        coords.insert(coords.end(), {x, -y, x, y});
      }
    }
    return SpherePointSet(sphere, std::move(coords));
  }

  // Projected work: (2r+1)^(d-2) descent nodes plus the two-square table.
  const double side = 2.0 * static_cast<double>(isqrt64(n)) + 1.0;
  const double projected = std::pow(side, d - 2) + static_cast<double>(n) * 0.8;
  if (projected > static_cast<double>(budget))
    throw BudgetError("enumeration of d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                      " needs about " + std::to_string(static_cast<std::uint64_t>(projected)) +
                      " steps, over the budget of " + std::to_string(budget));

  Enumerator(d, n, coords).run(n);
  return SpherePointSet(sphere, std::move(coords));
}

bool is_primitive(LatticePoint x) { return gcd_of(x) == 1; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Outside: return "outside";
    case Verdict::Inside: return "inside";
    case Verdict::Uncertain: return "uncertain";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Membership

namespace detail {

// Certified verdict for a real direction: sqrt(n) (u . x) against the plane
// offset c, with u and sqrt(n) enclosed. Inexact enclosures are rounded
// outward to integers over 2^kBits so the per-point work is integer-only;
// when every enclosure is an exact rational the comparison is exact.
class EnclosedCap {
 public:
  static constexpr unsigned kBits = 160;

  EnclosedCap(std::span<const Interval> unit, std::int64_t n, Rational offset) : offset_(std::move(offset)) {
    const Interval root = sqrt(Interval(n));
    exact_ = root.is_exact();
    for (const auto& u : unit) exact_ = exact_ && u.is_exact();
    if (exact_) {
      for (const auto& u : unit) unit_exact_.push_back(u.lo());
      root_exact_ = root.lo();
      return;
    }
    const Rational scale(Integer(1) << kBits);
    for (const auto& u : unit) {
      lo_.push_back(floor(u.lo() * scale));
      hi_.push_back(ceil(u.hi() * scale));
    }
    root_lo_ = floor(root.lo() * scale);
    root_hi_ = ceil(root.hi() * scale);
    // c scaled by 2^(2 kBits), as a fraction num / den.
    c_num_ = boost::multiprecision::numerator(offset_) << (2 * kBits);
    c_den_ = boost::multiprecision::denominator(offset_);
  }

  Verdict operator()(LatticePoint x) const {
    if (exact_) {
      Rational dot = 0;
      for (std::size_t i = 0; i < x.size(); ++i) dot += unit_exact_[i] * x[i];
      const Rational s = root_exact_ * dot;
      return s >= offset_ ? Verdict::Inside : Verdict::Outside;
    }
    Integer dlo = 0, dhi = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > 0) {
        dlo += lo_[i] * x[i];
        dhi += hi_[i] * x[i];
      } else if (x[i] < 0) {
        dlo += hi_[i] * x[i];
        dhi += lo_[i] * x[i];
      }
    }
    // [dlo, dhi] * [root_lo, root_hi] with root_lo >= 0.
    const Integer slo = dlo >= 0 ? dlo * root_lo_ : dlo * root_hi_;
    const Integer shi = dhi >= 0 ? dhi * root_hi_ : dhi * root_lo_;
    if (slo * c_den_ >= c_num_) return Verdict::Inside;
    if (shi * c_den_ < c_num_) return Verdict::Outside;
    return Verdict::Uncertain;
  }

 private:
  Rational offset_;
  bool exact_ = false;
  std::vector<Rational> unit_exact_;
  Rational root_exact_;
  std::vector<Integer> lo_, hi_;
  Integer root_lo_, root_hi_;
  Integer c_num_, c_den_;
};

}  // namespace detail

Verdict cap_contains(const Cap& cap, LatticePoint x) {
  const SphereSpec& sphere = cap.sphere();
  if (static_cast<int>(x.size()) != sphere.d) throw DomainError("point has the wrong dimension");
  if (squared_norm(x) != sphere.n) throw DomainError("point is not on the cap's sphere");
  const Rational c = plane_offset(sphere, cap.rho());

  if (cap.direction().is_rational()) {
    // |x - R beta|^2 <= rho  <=>  t sqrt(n) >= |b| c  with t = b . x, decided
    // by signs and squaring.
    const auto b = cap.direction().normal();
    Integer t = 0, B = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      t += Integer(b[i]) * x[i];
      B += Integer(b[i]) * b[i];
    }
    const Rational lhs = Rational(t * t * sphere.n);
    const Rational rhs = Rational(B) * c * c;
    bool inside = false;
    if (t >= 0) {
      inside = c <= 0 || lhs >= rhs;
    } else {
      inside = c < 0 && lhs <= rhs;
    }
    return inside ? Verdict::Inside : Verdict::Outside;
  }

  return detail::EnclosedCap(cap.direction().unit_enclosure(), sphere.n, c)(x);
}

Verdict segment_contains(const Segment& seg, LatticePoint x) {
  const Verdict outer = cap_contains(seg.outer(), x);
  if (outer == Verdict::Outside) return Verdict::Outside;
  const Verdict inner = cap_contains(seg.inner(), x);
  if (inner == Verdict::Inside) return Verdict::Outside;
  if (outer == Verdict::Inside && inner == Verdict::Outside) return Verdict::Inside;
  return Verdict::Uncertain;
}

OffsetBounds scaled_offset_bounds(const SphereSpec& sphere, std::span<const std::int64_t> b, const Rational& rho) {
  const Rational c = plane_offset(sphere, rho);
  if (sphere.n == 0) return {Integer(0), Integer(0)};
  Integer B = 0;
  for (auto v : b) B += Integer(v) * v;
  const Rational X = Rational(B) * c * c / sphere.n;
  const Integer k = floor_sqrt(X);
  const bool exact = Rational(k * k) == X;
  if (c >= 0) return {k, exact ? k : Integer(k + 1)};
  return {exact ? Integer(-k) : Integer(-k - 1), Integer(-k)};
}

CapTest::CapTest(const Cap& cap) {
  const SphereSpec& sphere = cap.sphere();
  if (cap.direction().is_rational()) {
    rational_ = true;
    normal_.assign(cap.direction().normal().begin(), cap.direction().normal().end());
    threshold_ = to_int64(scaled_offset_bounds(sphere, normal_, cap.rho()).ceil);
    return;
  }
  unit_.assign(cap.direction().unit().begin(), cap.direction().unit().end());
  const Rational offset = plane_offset(sphere, cap.rho());
  enclosed_ = std::make_shared<const detail::EnclosedCap>(cap.direction().unit_enclosure(), sphere.n, offset);
  offset_d_ = to_double(offset);
  sqrt_n_d_ = std::sqrt(static_cast<double>(sphere.n));
  // The double evaluation of sqrt(n) (u . x) is off by far less than this:
  // rounding contributes O(d eps n) and the stored unit vector differs from
  // the exact direction by at most 2^-40 per coordinate.
  margin_ = 0x1p-28 * (static_cast<double>(sphere.n) + std::abs(offset_d_) + 1.0);
}

Verdict CapTest::operator()(LatticePoint x) const {
  if (rational_) {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < x.size(); ++i) t += normal_[i] * x[i];
    return t >= threshold_ ? Verdict::Inside : Verdict::Outside;
  }
  double dot = 0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += unit_[i] * static_cast<double>(x[i]);
  const double diff = sqrt_n_d_ * dot - offset_d_;
  if (diff > margin_) return Verdict::Inside;
  if (diff < -margin_) return Verdict::Outside;
  return (*enclosed_)(x);
}

CountResult count_segment(const Segment& seg, const SpherePointSet& pts) {
  if (!(pts.sphere() == seg.sphere())) throw DomainError("point set belongs to a different sphere");
  const CapTest outer(seg.outer());
  const CapTest inner(seg.inner());
  CountResult r;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Verdict vo = outer(pts[i]);
    if (vo == Verdict::Outside) continue;
    const Verdict vi = inner(pts[i]);
    if (vi == Verdict::Inside) continue;
    if (vo == Verdict::Inside && vi == Verdict::Outside) ++r.lo;
    ++r.hi;
  }
  return r;
}

CountResult count_cap(const Cap& cap, const SpherePointSet& pts) {
  if (!(pts.sphere() == cap.sphere())) throw DomainError("point set belongs to a different sphere");
  const CapTest test(cap);
  CountResult r;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Verdict v = test(pts[i]);
    if (v == Verdict::Inside) ++r.lo;
    if (v != Verdict::Outside) ++r.hi;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text format

void write_point_set(std::ostream& out, const SpherePointSet& pts) {
  out << pts.sphere().d << ' ' << pts.sphere().n << ' ' << pts.size() << '\n';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto p = pts[i];
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) out << ' ';
      out << p[j];
    }
    out << '\n';
  }
}

SpherePointSet read_point_set(std::istream& in) {
  int d = 0;
  std::int64_t n = 0;
  std::size_t count = 0;
  if (!(in >> d >> n >> count)) throw DomainError("point set header must be \"d n count\"");
  SphereSpec sphere(d, n);
  std::vector<std::int64_t> coords(count * static_cast<std::size_t>(d));
  for (auto& v : coords)
    if (!(in >> v)) throw DomainError("point set body is truncated");
  return SpherePointSet(sphere, std::move(coords));
}

}  // namespace latseg
