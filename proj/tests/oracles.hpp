// Test-only reference implementations. Deliberately naive: full cube loops,
// no symmetry, no table lookups.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "latseg/lattice.hpp"

namespace oracle {

// Order-independent fingerprint of a set of points.
inline std::uint64_t point_hash(std::span<const std::int64_t> x) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto v : x) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

struct ShellStats {
  std::size_t count = 0;
  std::uint64_t sum_hash = 0;
  std::uint64_t xor_hash = 0;
};

// Walks the cube [-r, r]^d with r = floor(sqrt(max_n)) once and buckets every
// point by its squared norm.
inline std::vector<ShellStats> shells_by_cube(int d, std::int64_t max_n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= max_n) ++r;
  std::vector<ShellStats> out(static_cast<std::size_t>(max_n) + 1);
  std::vector<std::int64_t> x(static_cast<std::size_t>(d), -r);
  while (true) {
    std::int64_t s = 0;
    for (auto v : x) s += v * v;
    if (s <= max_n) {
      auto& sh = out[static_cast<std::size_t>(s)];
      const auto h = point_hash(x);
      ++sh.count;
      sh.sum_hash += h;
      sh.xor_hash ^= h;
    }
    int i = d - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == r) x[static_cast<std::size_t>(i--)] = -r;
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return out;
}

inline ShellStats stats_of(const latseg::SpherePointSet& pts) {
  ShellStats s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto h = point_hash(pts[i]);
    ++s.count;
    s.sum_hash += h;
    s.xor_hash ^= h;
  }
  return s;
}

// r_d(n) by looping over the first d-1 coordinates and testing whether the
// remainder is a perfect square. Used for single large n.
inline std::size_t count_representations(int d, std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  std::size_t count = 0;
  std::vector<std::int64_t> x(static_cast<std::size_t>(d - 1), -r);
  while (true) {
    std::int64_t s = 0;
    for (auto v : x) s += v * v;
    const std::int64_t rest = n - s;
    if (rest >= 0) {
      std::int64_t y = 0;
      while ((y + 1) * (y + 1) <= rest) ++y;
      if (y * y == rest) count += y == 0 ? 1 : 2;
    }
    int i = d - 2;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == r) x[static_cast<std::size_t>(i--)] = -r;
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return count;
}

// Segment membership straight from the definition, exact for integer
// directions: |x - R b/|b||^2 <= rho expands to 2n - rho <= 2 sqrt(n) b.x/|b|,
// decided by squaring with signs handled by hand.
inline bool in_ball(std::span<const std::int64_t> b, std::span<const std::int64_t> x, std::int64_t n,
                    const latseg::Rational& rho) {
  using latseg::Rational;
  std::int64_t dot = 0, bb = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    dot += b[i] * x[i];
    bb += b[i] * b[i];
  }
  const Rational lhs = 2 * Rational(n) - rho;  // need lhs <= 2 sqrt(n) dot / sqrt(bb)
  if (lhs <= 0) return dot >= 0 || lhs * lhs * bb >= Rational(4 * n) * dot * dot;
  if (dot <= 0) return false;
  return lhs * lhs * bb <= Rational(4 * n) * dot * dot;
}

inline std::size_t naive_segment_count(const latseg::SpherePointSet& pts, std::span<const std::int64_t> b,
                                       const latseg::Rational& rho1, const latseg::Rational& rho2) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (in_ball(b, pts[i], pts.sphere().n, rho1) && !in_ball(b, pts[i], pts.sphere().n, rho2)) ++c;
  return c;
}

}  // namespace oracle
