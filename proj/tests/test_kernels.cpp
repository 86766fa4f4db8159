#include <gtest/gtest.h>

#include <cstring>
#include <random>
#include <vector>

#include "support.hpp"
#include "tdroute/kernels.hpp"

namespace tdroute {
namespace {

using namespace kernels;

bool bit_equal(const NearestInCones& a, const NearestInCones& b) {
  return a.index == b.index && a.tie == b.tie &&
         std::memcmp(a.scale.data(), b.scale.data(), sizeof(a.scale)) == 0;
}

struct Data {
  std::vector<double> xs, ys;
};

// Random candidates with deliberate exact duplicates, points on cone rays
// and the apex itself mixed in.
Data make_data(const TriangleShape& s, std::size_t n, std::uint64_t seed, Point apex) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  Data d;
  for (std::size_t k = 0; k < n; ++k) {
    Point p{u(rng), u(rng)};
    switch (rng() % 8) {
      case 0:
        if (!d.xs.empty()) p = {d.xs[rng() % d.xs.size()], d.ys[rng() % d.ys.size()]};
        break;
      case 1:
        p = apex + u(rng) * s.side_direction(static_cast<int>(rng() % 3) + 1);
        break;
      case 2:
        p = apex;
        break;
      default:
        break;
    }
    d.xs.push_back(p.x);
    d.ys.push_back(p.y);
  }
  return d;
}

#if defined(TDROUTE_HAVE_AVX2)

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (detected_isa() != Isa::avx2) GTEST_SKIP() << "CPU lacks AVX2";
  }
};

TEST_F(KernelEquivalence, NearestInConesAllTails) {
  for (const auto& a : testing::standard_shapes()) {
    const TriangleShape s = canonical_triangle(a.theta1, a.theta2);
    const ConeTable t = cone_table(s);
    for (std::size_t n = 0; n < 40; ++n) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Point apex{0.1 * static_cast<double>(seed % 5), -0.2};
        const Data d = make_data(s, n, seed * 131 + n, apex);
        for (double tol : {0.0, 1e-12, 1e-3}) {
          const auto r1 = scalar::nearest_in_cones(t, apex.x, apex.y, d.xs, d.ys, tol);
          const auto r2 = avx2::nearest_in_cones(t, apex.x, apex.y, d.xs, d.ys, tol);
          EXPECT_TRUE(bit_equal(r1, r2)) << a.name << " n=" << n << " seed=" << seed;
        }
      }
    }
  }
}

TEST_F(KernelEquivalence, ParallelScanAllTails) {
  for (const auto& a : testing::standard_shapes()) {
    const TriangleShape s = canonical_triangle(a.theta1, a.theta2);
    const ConeTable t = cone_table(s);
    for (std::size_t n = 0; n < 40; ++n) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Point apex{0.3, 0.05 * static_cast<double>(seed)};
        const Data d = make_data(s, n, seed * 977 + n, apex);
        std::vector<std::uint8_t> o1(n, 99), o2(n, 99);
        scalar::parallel_scan(t, apex.x, apex.y, d.xs, d.ys, 1e-12, o1);
        avx2::parallel_scan(t, apex.x, apex.y, d.xs, d.ys, 1e-12, o2);
        EXPECT_EQ(o1, o2) << a.name << " n=" << n << " seed=" << seed;
      }
    }
  }
}

TEST_F(KernelEquivalence, ForcedDispatch) {
  const TriangleShape s = canonical_triangle(testing::kPi / 6, testing::kPi / 5);
  const ConeTable t = cone_table(s);
  const Data d = make_data(s, 1001, 5, {0, 0});
  force_isa(Isa::scalar);
  EXPECT_EQ(active_isa(), Isa::scalar);
  const auto r1 = nearest_in_cones(t, 0, 0, d.xs, d.ys, 1e-12);
  force_isa(Isa::avx2);
  EXPECT_EQ(active_isa(), Isa::avx2);
  const auto r2 = nearest_in_cones(t, 0, 0, d.xs, d.ys, 1e-12);
  force_isa(std::nullopt);
  EXPECT_TRUE(bit_equal(r1, r2));
}

#endif

// Brute force over the library's scalar geometry, independent of the kernel
// layout.
TEST(NearestInCones, MatchesBruteForce) {
  for (const auto& a : testing::standard_shapes()) {
    const TriangleShape s = canonical_triangle(a.theta1, a.theta2);
    const ConeTable t = cone_table(s);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 30;
      std::vector<double> xs(n), ys(n);
      for (std::size_t k = 0; k < n; ++k) {
        xs[k] = u(rng);
        ys[k] = u(rng);
      }
      const Point apex{u(rng), u(rng)};
      const auto r = nearest_in_cones(t, apex.x, apex.y, xs, ys, 1e-12);
      for (int c = 1; c <= 3; ++c) {
        std::int64_t best = kNone;
        double best_scale = 0;
        for (std::size_t k = 0; k < n; ++k) {
          const Point q{xs[k], ys[k]};
          if (cone_of(s, apex, q) != ConeId{Polarity::positive, c}) continue;
          const double sc = smallest_homothet(s, apex, q).scale;
          if (best == kNone || sc < best_scale) {
            best = static_cast<std::int64_t>(k);
            best_scale = sc;
          }
        }
        EXPECT_EQ(r.index[c - 1], best);
        if (best != kNone) {
          EXPECT_NEAR(r.scale[c - 1], best_scale, 1e-12);
        }
      }
    }
  }
}

TEST(NearestInCones, ReportsTies) {
  const TriangleShape s = canonical_triangle(testing::kPi / 3, testing::kPi / 3);
  const ConeTable t = cone_table(s);
  // Both at homothet scale 1 in cone 1 of the origin.
  const std::vector<double> xs{0.9, 0.6};
  const std::vector<double> ys{0.1 * std::sqrt(3.0), 0.4 * std::sqrt(3.0)};
  const auto r = nearest_in_cones(t, 0, 0, xs, ys, 1e-12);
  EXPECT_EQ(r.index[0], 0);
  EXPECT_TRUE(r.tie[0]);
  EXPECT_FALSE(r.tie[1]);
}

TEST(ParallelScan, Codes) {
  const TriangleShape s = canonical_triangle(testing::kPi / 3, testing::kPi / 3);
  const ConeTable t = cone_table(s);
  const std::vector<double> xs{0.0, 2.0, 0.5, 0.3};
  const std::vector<double> ys{0.0, 0.0, 0.5 * std::sqrt(3.0), 0.9};
  std::vector<std::uint8_t> out(4);
  parallel_scan(t, 0, 0, xs, ys, 1e-12, out);
  EXPECT_EQ(out[0], kCoincident);
  EXPECT_EQ(out[1], 1);
  EXPECT_EQ(out[2], 3);
  EXPECT_EQ(out[3], kFree);
}

}  // namespace
}  // namespace tdroute
