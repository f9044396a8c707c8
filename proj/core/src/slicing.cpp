#include "latseg/slicing.hpp"

#include <algorithm>
#include <ostream>

namespace latseg {

std::size_t SliceHistogram::max_count() const {
  std::size_t m = 0;
  for (const auto& [t, c] : buckets) m = std::max(m, c);
  return m;
}

std::size_t SliceHistogram::total() const {
  std::size_t s = 0;
  for (const auto& [t, c] : buckets) s += c;
  return s;
}

SliceHistogram slice(const SpherePointSet& pts, std::span<const std::int64_t> b) {
  if (static_cast<int>(b.size()) != pts.sphere().d) throw DomainError("normal has the wrong dimension");
  const std::int64_t g = gcd_of(b);
  if (g == 0) throw DomainError("slice normal must be nonzero");
  SliceHistogram h;
  h.normal.assign(b.begin(), b.end());
  if (g != 1) {
    for (auto& v : h.normal) v /= g;
    h.normalized = true;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto x = pts[i];
    std::int64_t t = 0;
    for (std::size_t j = 0; j < x.size(); ++j) t += h.normal[j] * x[j];
    ++h.buckets[t];
  }
  return h;
}

std::int64_t count_slices_hit(const Segment& seg) {
  if (!seg.direction().is_rational()) throw DomainError("slab counting needs a rational direction");
  const auto b = seg.direction().normal();
  const Integer lo = scaled_offset_bounds(seg.sphere(), b, seg.rho1()).ceil;
  const Integer hi = scaled_offset_bounds(seg.sphere(), b, seg.rho2()).floor;
  return hi < lo ? 0 : to_int64(hi - lo + 1);
}

std::vector<std::vector<std::int64_t>> primitive_normals(int d, std::int64_t max_norm, std::uint64_t budget) {
  if (max_norm < 1) throw DomainError("normal sweep bound must be at least 1");
  double box = 1;
  for (int i = 0; i < d; ++i) box *= static_cast<double>(2 * max_norm + 1);
  if (box > static_cast<double>(budget))
    throw BudgetError("normal sweep with |b| <= " + std::to_string(max_norm) + " in dimension " +
                      std::to_string(d) + " exceeds the sweep budget");

  const std::int64_t limit = max_norm * max_norm;
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> b(static_cast<std::size_t>(d));
  auto rec = [&](auto&& self, int i, std::int64_t used, bool leading_seen) -> void {
    if (i == d) {
      if (leading_seen && gcd_of(b) == 1) out.push_back(b);
      return;
    }
    for (std::int64_t v = -max_norm; v <= max_norm; ++v) {
      if (used + v * v > limit) continue;
      if (!leading_seen && v < 0) continue;  // first nonzero entry positive
      b[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, used + v * v, leading_seen || v != 0);
    }
  };
  rec(rec, 0, 0, false);
  return out;
}

KappaEstimate kappa_estimate(const SpherePointSet& pts, std::int64_t max_normal_norm, std::uint64_t budget) {
  const auto normals = primitive_normals(pts.sphere().d, max_normal_norm, budget);
  if (static_cast<double>(normals.size()) * static_cast<double>(pts.size()) > static_cast<double>(budget))
    throw BudgetError("kappa sweep exceeds the sweep budget");
  KappaEstimate est;
  est.candidate_bound = max_normal_norm;
  est.normals_swept = normals.size();
  for (const auto& b : normals) {
    const SliceHistogram h = slice(pts, b);
    for (const auto& [t, c] : h.buckets) {
      if (c > est.value) {
        est.value = c;
        est.witnesses.clear();
      }
      if (c == est.value) est.witnesses.push_back({b, t});
    }
  }
  if (est.value == 0) est.witnesses.clear();
  return est;
}

Integer ceil_normal_times_height(const Segment& seg) {
  if (!seg.direction().is_rational()) throw DomainError("|b| h needs a rational direction");
  Integer B = 0;
  for (auto v : seg.direction().normal()) B += Integer(v) * v;
  return ceil_sqrt(Rational(B) * segment_height(seg).squared);
}

SlicingBoundReport check_slicing_bound(const Segment& seg, const SpherePointSet& pts, const KappaEstimate& kappa) {
  if (!seg.direction().is_rational()) throw DomainError("the slicing bound needs a rational direction");
  const auto b = seg.direction().normal();
  std::int64_t B = 0;
  for (auto v : b) B += v * v;
  if (B > kappa.candidate_bound * kappa.candidate_bound)
    throw DomainError("kappa sweep did not include the segment's normal");

  SlicingBoundReport r;
  const CountResult count = count_segment(seg, pts);
  r.count = count.hi;
  r.kappa_b = slice(pts, b).max_count();
  r.kappa_global = kappa.value;
  r.slices_hit = count_slices_hit(seg);
  r.ceil_bh = ceil_normal_times_height(seg);
  r.bound = Integer(r.kappa_b) * (1 + r.ceil_bh);
  r.bound_global = Integer(r.kappa_global) * (1 + r.ceil_bh);
  const Integer finite_form = Integer(r.kappa_b) * r.slices_hit;
  r.holds = Integer(r.count) <= finite_form && finite_form <= r.bound && r.bound <= r.bound_global;
  return r;
}

void write_histogram_csv(std::ostream& out, const SliceHistogram& hist) {
  std::string normal;
  for (std::size_t i = 0; i < hist.normal.size(); ++i) {
    if (i) normal += ' ';
    normal += std::to_string(hist.normal[i]);
  }
  out << "normal,t,count\n";
  for (const auto& [t, c] : hist.buckets) out << normal << ',' << t << ',' << c << '\n';
}

}  // namespace latseg
