#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "latseg/slicing.hpp"

using namespace latseg;

TEST(Slice, CircleHistogram) {
  const SpherePointSet pts = enumerate_sphere(SphereSpec(2, 25));
  const std::vector<std::int64_t> b{0, 1};
  const SliceHistogram h = slice(pts, b);
  const std::map<std::int64_t, std::size_t> expected{{-5, 1}, {-4, 2}, {-3, 2}, {0, 2}, {3, 2}, {4, 2}, {5, 1}};
  EXPECT_EQ(h.buckets, expected);
  EXPECT_EQ(h.max_count(), 2u);
  EXPECT_EQ(h.total(), pts.size());
  EXPECT_FALSE(h.normalized);
}

TEST(Slice, NormalizesNonPrimitive) {
  const SpherePointSet pts = enumerate_sphere(SphereSpec(2, 25));
  const std::vector<std::int64_t> b{0, 3};
  const SliceHistogram h = slice(pts, b);
  EXPECT_TRUE(h.normalized);
  EXPECT_EQ(h.normal, (std::vector<std::int64_t>{0, 1}));
  const std::vector<std::int64_t> z{0, 0};
  EXPECT_THROW(slice(pts, z), DomainError);
}

TEST(Slice, TotalsProperty) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const SpherePointSet pts = enumerate_sphere(SphereSpec(3, static_cast<std::int64_t>(rng() % 500)));
    std::vector<std::int64_t> b{static_cast<std::int64_t>(rng() % 5), static_cast<std::int64_t>(rng() % 5) - 2, 1};
    const SliceHistogram h = slice(pts, b);
    EXPECT_EQ(h.total(), pts.size());
    // Symmetric under x -> -x.
    for (const auto& [t, c] : h.buckets) {
      auto it = h.buckets.find(-t);
      ASSERT_NE(it, h.buckets.end());
      EXPECT_EQ(it->second, c);
    }
  }
}

TEST(SlicesHit, FullCircle) {
  const SphereSpec s(2, 25);
  const Segment full(s, Direction::rational({1, 0}), Rational(100), Rational(0));
  EXPECT_EQ(count_slices_hit(full), 11);
  const SpherePointSet pts = enumerate_sphere(s);
  EXPECT_LE(count_segment(full, pts).hi, 2u * 11u);
}

TEST(SlicesHit, RequiresRationalDirection) {
  const SphereSpec s(2, 25);
  EXPECT_THROW(count_slices_hit(Segment(s, Direction::real({0.6, 0.8}), Rational(10), Rational(0))), DomainError);
}

TEST(Kappa, SmallSphere) {
  const SpherePointSet pts = enumerate_sphere(SphereSpec(3, 9));
  const KappaEstimate k = kappa_estimate(pts, 1);
  EXPECT_EQ(k.value, 8u);
  EXPECT_EQ(k.normals_swept, 3u);
  ASSERT_FALSE(k.witnesses.empty());
  EXPECT_EQ(std::abs(k.witnesses.front().offset), 2);
}

TEST(Kappa, PrimitiveNormalsAreCanonical) {
  const auto normals = primitive_normals(3, 2);
  for (const auto& b : normals) {
    EXPECT_EQ(gcd_of(b), 1);
    const auto first = std::find_if(b.begin(), b.end(), [](auto v) { return v != 0; });
    EXPECT_GT(*first, 0);
  }
  EXPECT_TRUE(std::is_sorted(normals.begin(), normals.end()));
  EXPECT_THROW(primitive_normals(10, 50, 1000), BudgetError);
}

// count <= kappa_b * slices_hit <= kappa_b (1 + ceil(|b| h)) on random
// rational-direction segments.
TEST(SlicingBound, ChainProperty) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const SphereSpec s(d, 1 + static_cast<std::int64_t>(rng() % 600));
    const SpherePointSet pts = enumerate_sphere(s);
    std::vector<std::int64_t> b(static_cast<std::size_t>(d));
    do {
      for (auto& v : b) v = static_cast<std::int64_t>(rng() % 5) - 2;
    } while (gcd_of(b) == 0);
    Rational r1(static_cast<std::int64_t>(rng() % (4 * s.n + 1)));
    Rational r2(static_cast<std::int64_t>(rng() % (4 * s.n + 1)));
    if (r1 == r2) continue;
    if (r1 < r2) std::swap(r1, r2);
    const Segment seg(s, Direction::rational(b), r1, r2);
    const KappaEstimate k = kappa_estimate(pts, 4);
    const SlicingBoundReport rep = check_slicing_bound(seg, pts, k);
    EXPECT_TRUE(rep.holds);
    EXPECT_LE(rep.kappa_b, rep.kappa_global);
    EXPECT_LE(rep.bound, rep.bound_global);
    EXPECT_EQ(rep.count, count_segment(seg, pts).lo);
  }
}

TEST(SlicingBound, NormalOutsideSweep) {
  const SphereSpec s(3, 9);
  const SpherePointSet pts = enumerate_sphere(s);
  const KappaEstimate k = kappa_estimate(pts, 1);
  EXPECT_THROW(check_slicing_bound(Segment(s, Direction::rational({1, 2, 2}), Rational(9), Rational(0)), pts, k),
               DomainError);
}

TEST(HistogramCsv, Format) {
  const SpherePointSet pts = enumerate_sphere(SphereSpec(2, 1));
  const std::vector<std::int64_t> b{1, 0};
  std::ostringstream out;
  write_histogram_csv(out, slice(pts, b));
  EXPECT_EQ(out.str(), "normal,t,count\n1 0,-1,1\n1 0,0,2\n1 0,1,1\n");
}
