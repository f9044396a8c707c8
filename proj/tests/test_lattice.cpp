#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "latseg/lattice.hpp"
#include "latseg/oracle.hpp"
#include "oracles.hpp"

using namespace latseg;

TEST(Enumerate, KnownCounts) {
  EXPECT_EQ(enumerate_sphere(SphereSpec(2, 25)).size(), 12u);
  EXPECT_EQ(enumerate_sphere(SphereSpec(3, 7)).size(), 0u);
  EXPECT_EQ(enumerate_sphere(SphereSpec(4, 2)).size(), 24u);
  EXPECT_EQ(enumerate_sphere(SphereSpec(3, 0)).size(), 1u);
  EXPECT_EQ(enumerate_sphere(SphereSpec(2, 3)).size(), 0u);
}

TEST(Enumerate, MatchesCubeOracle) {
  for (int d = 2; d <= 4; ++d) {
    const std::int64_t max_n = d == 4 ? 120 : 300;
    const auto shells = oracle::shells_by_cube(d, max_n);
    for (std::int64_t n = 0; n <= max_n; ++n) {
      const auto s = oracle::stats_of(enumerate_sphere(SphereSpec(d, n)));
      const auto& o = shells[static_cast<std::size_t>(n)];
      ASSERT_EQ(s.count, o.count) << "d=" << d << " n=" << n;
      ASSERT_EQ(s.sum_hash, o.sum_hash) << "d=" << d << " n=" << n;
      ASSERT_EQ(s.xor_hash, o.xor_hash) << "d=" << d << " n=" << n;
    }
  }
}

TEST(Enumerate, StrictLexOrderAndSymmetry) {
  const SpherePointSet pts = enumerate_sphere(SphereSpec(3, 50));
  for (std::size_t i = 1; i < pts.size(); ++i)
    EXPECT_TRUE(std::lexicographical_compare(pts[i - 1].begin(), pts[i - 1].end(), pts[i].begin(), pts[i].end()));
  // Closed under negation and coordinate swaps.
  std::vector<std::vector<std::int64_t>> all;
  for (std::size_t i = 0; i < pts.size(); ++i) all.emplace_back(pts[i].begin(), pts[i].end());
  for (const auto& p : all) {
    EXPECT_TRUE(std::binary_search(all.begin(), all.end(), std::vector<std::int64_t>{-p[0], -p[1], -p[2]}));
    EXPECT_TRUE(std::binary_search(all.begin(), all.end(), std::vector<std::int64_t>{p[1], p[0], p[2]}));
  }
}

TEST(Enumerate, BudgetAndValidation) {
  EXPECT_THROW(enumerate_sphere(SphereSpec(6, 1'000'000), 1000), BudgetError);
  EXPECT_THROW(SpherePointSet(SphereSpec(2, 5), {1, 2, 2, 2}), DomainError);  // (2,2) off the sphere
  EXPECT_THROW(SpherePointSet(SphereSpec(2, 5), {2, 1, 1, 2}), DomainError);  // not sorted
}

TEST(PointSetFormat, RoundTrip) {
  const SpherePointSet pts = enumerate_sphere(SphereSpec(3, 9));
  std::stringstream io;
  write_point_set(io, pts);
  EXPECT_EQ(io.str().substr(0, 7), "3 9 30\n");
  EXPECT_EQ(read_point_set(io), pts);
  std::stringstream bad("2 5 1\n1 1\n");
  EXPECT_THROW(read_point_set(bad), DomainError);
  std::stringstream empty("3 7 0\n");
  EXPECT_EQ(read_point_set(empty).size(), 0u);
}

TEST(Primitive, Basic) {
  const std::vector<std::int64_t> a{2, 4}, b{3, 4}, z{0, 0};
  EXPECT_FALSE(is_primitive(a));
  EXPECT_TRUE(is_primitive(b));
  EXPECT_FALSE(is_primitive(z));
}

TEST(Membership, WorkedCircleExample) {
  const SphereSpec s(2, 25);
  const SpherePointSet pts = enumerate_sphere(s);
  const Direction b = Direction::rational({1, 0});
  EXPECT_EQ(count_cap(Cap(s, b, Rational(50)), pts), (CountResult{7, 7}));
  EXPECT_EQ(count_segment(Segment(s, b, Rational(50), Rational(2)), pts), (CountResult{6, 6}));
  const std::vector<std::int64_t> apex{5, 0}, side{0, 5}, back{-5, 0};
  const Cap hemi(s, b, Rational(50));
  EXPECT_EQ(cap_contains(hemi, apex), Verdict::Inside);
  EXPECT_EQ(cap_contains(hemi, side), Verdict::Inside);  // boundary is closed
  EXPECT_EQ(cap_contains(hemi, back), Verdict::Outside);
  EXPECT_EQ(cap_contains(Cap(s, b, Rational(0)), apex), Verdict::Inside);
  EXPECT_EQ(cap_contains(Cap(s, b, Rational(100)), back), Verdict::Inside);
}

TEST(Membership, EmptySphere) {
  const SphereSpec s(3, 7);
  const SpherePointSet pts = enumerate_sphere(s);
  EXPECT_EQ(count_segment(Segment(s, Direction::rational({1, 1, 1}), Rational(28), Rational(0)), pts),
            (CountResult{0, 0}));
}

TEST(Membership, FullSphereDropsOnlyTheApex) {
  const SphereSpec s(3, 9);
  const SpherePointSet pts = enumerate_sphere(s);
  EXPECT_EQ(count_segment(Segment(s, Direction::rational({1, 2, 2}), Rational(36), Rational(0)), pts).lo,
            pts.size() - 1);
  EXPECT_EQ(count_segment(Segment(s, Direction::rational({1, 1, 0}), Rational(36), Rational(0)), pts).lo,
            pts.size());
}

// Float directions that coincide with an integer direction give the same
// verdicts wherever they are decidable.
TEST(Membership, RealAgreesWithRational) {
  std::mt19937_64 rng(5);
  const SphereSpec s(3, 101);
  const SpherePointSet pts = enumerate_sphere(s);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::int64_t> b{static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 7) - 3,
                                static_cast<std::int64_t>(rng() % 7) - 3};
    if (b == std::vector<std::int64_t>{0, 0, 0}) continue;
    const Rational rho(static_cast<std::int64_t>(rng() % 404), 1);
    const Cap exact(s, Direction::rational(b), rho);
    const Cap approx(s, Direction::real({double(b[0]), double(b[1]), double(b[2])}), rho);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const Verdict v = cap_contains(approx, pts[j]);
      if (v != Verdict::Uncertain) {
        EXPECT_EQ(v, cap_contains(exact, pts[j]));
      }
    }
  }
}

TEST(Membership, CapTestMatchesPredicate) {
  std::mt19937_64 rng(9);
  const SphereSpec s(4, 90);
  const SpherePointSet pts = enumerate_sphere(s);
  for (int i = 0; i < 30; ++i) {
    const Direction dir = Direction::real({double(rng() % 1000) - 500, double(rng() % 1000) - 500,
                                           double(rng() % 1000) - 500, double(rng() % 1000) + 1});
    const Cap cap(s, dir, Rational(static_cast<std::int64_t>(rng() % 360), 1));
    const CapTest test(cap);
    for (std::size_t j = 0; j < pts.size(); ++j) EXPECT_EQ(test(pts[j]), cap_contains(cap, pts[j]));
  }
}

TEST(Membership, NaiveOracleOnRationalSegments) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const SphereSpec s(d, static_cast<std::int64_t>(rng() % 400));
    const SpherePointSet pts = enumerate_sphere(s);
    std::vector<std::int64_t> b(static_cast<std::size_t>(d));
    do {
      for (auto& v : b) v = static_cast<std::int64_t>(rng() % 9) - 4;
    } while (gcd_of(b) == 0);
    Rational r1(static_cast<std::int64_t>(rng() % (4 * s.n + 1)), 1 + static_cast<std::int64_t>(rng() % 3));
    Rational r2(static_cast<std::int64_t>(rng() % (4 * s.n + 1)), 1 + static_cast<std::int64_t>(rng() % 3));
    if (r1 > 4 * Rational(s.n)) r1 = 4 * Rational(s.n);
    if (r1 == r2) continue;
    if (r1 < r2) std::swap(r1, r2);
    const CountResult c = count_segment(Segment(s, Direction::rational(b), r1, r2), pts);
    ASSERT_TRUE(c.exact());
    EXPECT_EQ(c.lo, oracle::naive_segment_count(pts, b, r1, r2));
  }
}

TEST(BruteForceOracle, Brackets) {
  const SphereSpec s(3, 9);
  const SpherePointSet pts = enumerate_sphere(s);
  const Segment full(s, Direction::rational({1, 2, 2}), Rational(36), Rational(0));
  const CountResult o = brute_force_segment_count_oracle(full);
  EXPECT_LE(o.lo, pts.size() - 1);
  EXPECT_EQ(o.hi, pts.size());
  EXPECT_EQ(brute_force_segment_count_oracle(Segment(SphereSpec(3, 7), Direction::rational({1, 0, 0}), Rational(1),
                                                     Rational(0))),
            (CountResult{0, 0}));
  EXPECT_THROW(brute_force_segment_count_oracle(Segment(SphereSpec(5, 9), Direction::rational({1, 0, 0, 0, 0}),
                                                        Rational(1), Rational(0))),
               DomainError);
}

TEST(BruteForceOracle, AgreesWithCountSegment) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const SphereSpec s(d, 1 + static_cast<std::int64_t>(rng() % 2000));
    const SpherePointSet pts = enumerate_sphere(s);
    std::vector<std::int64_t> b(static_cast<std::size_t>(d));
    if (!pts.empty() && rng() % 3 == 0) {
      // Apex on a lattice point: the adversarial boundary case.
      const auto p = pts[rng() % pts.size()];
      b.assign(p.begin(), p.end());
    } else {
      do {
        for (auto& v : b) v = static_cast<std::int64_t>(rng() % 11) - 5;
      } while (gcd_of(b) == 0);
    }
    const std::int64_t hi = 4 * s.n;
    Rational r1(static_cast<std::int64_t>(rng() % (hi + 1)));
    Rational r2(static_cast<std::int64_t>(rng() % (hi + 1)));
    if (r1 == r2) continue;
    if (r1 < r2) std::swap(r1, r2);
    const Segment seg(s, Direction::rational(b), r1, r2);
    const CountResult exact = count_segment(seg, pts);
    const CountResult o = brute_force_segment_count_oracle(seg);
    ASSERT_TRUE(exact.exact());
    EXPECT_LE(o.lo, exact.lo);
    EXPECT_GE(o.hi, exact.lo);
  }
}
