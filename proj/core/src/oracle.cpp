#include "latseg/oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace latseg {

namespace {

namespace mp = boost::multiprecision;
using Float256 = mp::number<mp::cpp_bin_float<256, mp::digit_base_2>, mp::et_off>;

Float256 to_float(const Rational& r) {
  return Float256(mp::numerator(r)) / Float256(mp::denominator(r));
}

enum class Side { In, Out, Edge };

Side ball_side(const std::vector<Float256>& x, const std::vector<Float256>& center, const Float256& rho,
               const Float256& tol) {
  Float256 dist2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Float256 diff = x[i] - center[i];
    dist2 += diff * diff;
  }
  const Float256 gap = dist2 - rho;
  if (mp::abs(gap) <= tol) return Side::Edge;
  return gap < 0 ? Side::In : Side::Out;
}

}  // namespace

CountResult brute_force_segment_count_oracle(const Segment& seg) {
  const int d = seg.sphere().d;
  const std::int64_t n = seg.sphere().n;
  if (d > 4 || n > 10'000) throw DomainError("brute-force oracle is limited to d <= 4 and n <= 10^4");

  // Apex R beta with beta the normalized exact direction vector.
  const auto w = seg.direction().exact_vector();
  Float256 wn = 0;
  for (const Rational& v : w) wn += to_float(v) * to_float(v);
  wn = mp::sqrt(wn);
  const Float256 R = mp::sqrt(Float256(n));
  std::vector<Float256> apex;
  for (const Rational& v : w) apex.push_back(R * to_float(v) / wn);

  const Float256 rho1 = to_float(seg.rho1());
  const Float256 rho2 = to_float(seg.rho2());
  const Float256 tol = mp::ldexp(Float256(4 * n + 1), -200);

  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;

  CountResult out;
  std::vector<std::int64_t> x(static_cast<std::size_t>(d), -r);
  std::vector<Float256> xf(static_cast<std::size_t>(d));
  auto classify = [&](void) {
    for (int i = 0; i < d; ++i) xf[static_cast<std::size_t>(i)] = Float256(x[static_cast<std::size_t>(i)]);
    const Side outer = ball_side(xf, apex, rho1, tol);
    if (outer == Side::Out) return;
    const Side inner = ball_side(xf, apex, rho2, tol);
    if (inner == Side::In) return;
    if (outer == Side::In && inner == Side::Out) ++out.lo;
    ++out.hi;
  };

  // Odometer over the first d-1 coordinates.
  while (true) {
    std::int64_t partial = 0;
    for (int i = 0; i < d - 1; ++i) partial += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    const std::int64_t rest = n - partial;
    if (rest >= 0) {
      std::int64_t y = 0;
      while ((y + 1) * (y + 1) <= rest) ++y;
      if (y * y == rest) {
        x.back() = -y;
        classify();
        if (y != 0) {
          x.back() = y;
          classify();
        }
      }
    }
    int i = d - 2;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == r) {
      x[static_cast<std::size_t>(i)] = -r;
      --i;
    }
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace latseg
