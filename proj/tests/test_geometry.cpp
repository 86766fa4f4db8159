#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "support.hpp"
#include "tdroute/geometry.hpp"

namespace tdroute {
namespace {

using testing::kPi;

// Independent cone oracle: classify the direction angle of q - p against the
// six sector boundaries given by the side directions of the triangle.
ConeId sector_oracle(const TriangleShape& shape, Point p, Point q) {
  const double a = std::atan2(q.y - p.y, q.x - p.x);
  for (int i = 1; i <= 3; ++i) {
    for (int sign : {1, -1}) {
      const Point r1 = sign * (shape.corner(i + 1) - shape.corner(i));
      const Point r2 = sign * (shape.corner(i - 1) - shape.corner(i));
      double lo = std::atan2(r1.y, r1.x);
      double hi = std::atan2(r2.y, r2.x);
      double width = std::remainder(hi - lo, 2 * kPi);
      if (width < 0) {
        std::swap(lo, hi);
        width = -width;
      }
      double off = std::remainder(a - lo, 2 * kPi);
      if (off < 0) off += 2 * kPi;
      if (off < width) return {sign > 0 ? Polarity::positive : Polarity::negative, i};
    }
  }
  ADD_FAILURE() << "no sector";
  return {};
}

TEST(CanonicalTriangle, Equilateral) {
  const TriangleShape s = canonical_triangle(kPi / 3, kPi / 3);
  EXPECT_EQ(s.corner(1), (Point{0, 0}));
  EXPECT_EQ(s.corner(2), (Point{1, 0}));
  EXPECT_NEAR(s.corner(3).x, 0.5, 1e-12);
  EXPECT_NEAR(s.corner(3).y, std::sqrt(3.0) / 2, 1e-12);
}

TEST(CanonicalTriangle, LawOfSinesPlacement) {
  const TriangleShape s = canonical_triangle(kPi / 6, kPi / 5);
  const double r = std::sin(kPi / 5) / std::sin(kPi - kPi / 6 - kPi / 5);
  EXPECT_NEAR(r, 0.643411, 1e-6);
  EXPECT_NEAR(s.corner(3).x, r * std::cos(kPi / 6), 1e-12);
  EXPECT_NEAR(s.corner(3).y, r * std::sin(kPi / 6), 1e-12);
}

TEST(CanonicalTriangle, CornerAnglesMatch) {
  for (const auto& a : testing::standard_shapes()) {
    const TriangleShape s = canonical_triangle(a.theta1, a.theta2);
    double sum = 0;
    for (int i = 1; i <= 3; ++i) {
      const Point u = s.corner(i + 1) - s.corner(i);
      const Point v = s.corner(i - 1) - s.corner(i);
      const double angle = std::atan2(std::abs(cross(u, v)), dot(u, v));
      EXPECT_NEAR(angle, s.theta(i), 1e-12) << a.name << " corner " << i;
      sum += s.theta(i);
    }
    EXPECT_NEAR(sum, kPi, 1e-12);
  }
}

TEST(CanonicalTriangle, RejectsBadAngles) {
  EXPECT_THROW(canonical_triangle(kPi / 3, kPi / 6), InvalidShapeError);
  EXPECT_THROW(canonical_triangle(0.0, kPi / 3), InvalidShapeError);
  EXPECT_THROW(canonical_triangle(-0.1, kPi / 3), InvalidShapeError);
  EXPECT_THROW(canonical_triangle(kPi / 6, kPi * 0.6), InvalidShapeError);
  EXPECT_THROW(canonical_triangle(kPi / 2, kPi / 2), InvalidShapeError);
}

TEST(CanonicalTriangle, DiagnosticNamesInequality) {
  try {
    canonical_triangle(kPi / 3, kPi / 6);
    FAIL();
  } catch (const InvalidShapeError& e) {
    EXPECT_NE(std::string(e.what()).find("theta1"), std::string::npos) << e.what();
  }
}

TEST(ConeOf, EquilateralExamples) {
  const TriangleShape s = canonical_triangle(kPi / 3, kPi / 3);
  EXPECT_EQ(cone_of(s, {0, 0}, {0.5, 0.3}), (ConeId{Polarity::positive, 1}));
  EXPECT_EQ(cone_of(s, {0, 0}, {-0.5, -0.3}), (ConeId{Polarity::negative, 1}));
  EXPECT_EQ(cone_of(s, {0, 0}, {0, 1}), (ConeId{Polarity::negative, 3}));
}

TEST(ConeOf, EquilateralSectorTable) {
  const TriangleShape s = canonical_triangle(kPi / 3, kPi / 3);
  const ConeId table[6] = {{Polarity::positive, 1}, {Polarity::negative, 3},
                           {Polarity::positive, 2}, {Polarity::negative, 1},
                           {Polarity::positive, 3}, {Polarity::negative, 2}};
  for (int k = 0; k < 6; ++k) {
    const double a = (k * 60.0 + 30.0) * kPi / 180.0;
    EXPECT_EQ(cone_of(s, {0, 0}, {std::cos(a), std::sin(a)}), table[k]) << k;
  }
}

TEST(ConeOf, Errors) {
  const TriangleShape s = canonical_triangle(kPi / 3, kPi / 3);
  EXPECT_THROW(cone_of(s, {1, 1}, {1, 1}), DegenerateInputError);
  EXPECT_THROW(cone_of(s, {0, 0}, {1, 0}), GeneralPositionError);
  EXPECT_THROW(cone_of(s, {0, 0}, {-0.5, -std::sqrt(3.0) / 2}), GeneralPositionError);
}

TEST(ConeOf, PartitionAndAntisymmetry) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const auto& a : testing::standard_shapes()) {
    const TriangleShape s = canonical_triangle(a.theta1, a.theta2);
    for (int k = 0; k < 2000; ++k) {
      const Point p{u(rng), u(rng)};
      const Point q{u(rng), u(rng)};
      const ConeId c = cone_of(s, p, q);
      EXPECT_EQ(c, sector_oracle(s, p, q));
      const ConeId back = cone_of(s, q, p);
      EXPECT_EQ(back.index, c.index);
      EXPECT_NE(back.polarity, c.polarity);
    }
  }
}

TEST(SmallestHomothet, EquilateralExample) {
  const TriangleShape s = canonical_triangle(kPi / 3, kPi / 3);
  const Homothet h = smallest_homothet(s, {0, 0}, {0.5, 0.3});
  // 0.5 = a + b/2, 0.3 = b*sqrt(3)/2.
  const double b = 0.6 / std::sqrt(3.0);
  const double sigma = 0.5 - b / 2 + b;
  EXPECT_NEAR(sigma, 0.67321, 1e-5);
  EXPECT_NEAR(h.scale, sigma, 1e-12);
  EXPECT_NEAR(h.corner(1).x, 0.0, 1e-12);
  EXPECT_NEAR(h.corner(2).x, 0.67321, 1e-5);
  EXPECT_NEAR(h.corner(3).x, 0.33660, 1e-5);
  EXPECT_NEAR(h.corner(3).y, 0.58301, 1e-5);
  EXPECT_EQ(h.pinned_corner, 1);
}

TEST(SmallestHomothet, NearCornerLimit) {
  const TriangleShape s = canonical_triangle(kPi / 3, kPi / 3);
  const Homothet h = smallest_homothet(s, {0, 0}, {0.8, 1e-9});
  EXPECT_NEAR(h.scale, 0.8, 1e-8);
  EXPECT_LT(distance(h.corner(2), {0.8, 1e-9}), 1e-8);
}

TEST(SmallestHomothet, SymmetricAndMinimal) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const auto& a : testing::standard_shapes()) {
    const TriangleShape s = canonical_triangle(a.theta1, a.theta2);
    for (int k = 0; k < 1000; ++k) {
      const Point p{u(rng), u(rng)};
      const Point q{u(rng), u(rng)};
      const Homothet h = smallest_homothet(s, p, q);
      EXPECT_EQ(h, smallest_homothet(s, q, p));
      EXPECT_TRUE(homothet_contains(h, p, Containment::closed));
      EXPECT_TRUE(homothet_contains(h, q, Containment::closed));
      for (Point x : {p, q}) {
        const auto l = barycentric(h, x);
        EXPECT_LE(std::min({std::abs(l[0]), std::abs(l[1]), std::abs(l[2])}), 1e-12);
      }
      // Same orientation and angles.
      for (int i = 1; i <= 3; ++i) {
        const Point e = h.corner(i + 1) - h.corner(i);
        const Point f = s.corner(i + 1) - s.corner(i);
        EXPECT_NEAR(cross(e, f), 0.0, 1e-12);
        EXPECT_GT(dot(e, f), 0.0);
      }
      const Homothet shrunk =
          homothet_at(s, h.corner(h.pinned_corner), h.pinned_corner, 0.999 * h.scale);
      EXPECT_FALSE(homothet_contains(shrunk, h.edge_point, Containment::closed));
    }
  }
}

TEST(SmallestHomothet, InteriorInsidePinnedCone) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_real_distribution<double> w(0.01, 1);
  for (const auto& a : testing::standard_shapes()) {
    const TriangleShape s = canonical_triangle(a.theta1, a.theta2);
    for (int k = 0; k < 300; ++k) {
      const Point p{u(rng), u(rng)};
      const Point q{u(rng), u(rng)};
      const ConeId c = cone_of(s, p, q);
      const Point apex = c.positive() ? p : q;
      const Homothet h = smallest_homothet(s, p, q);
      for (int m = 0; m < 10; ++m) {
        const double l1 = w(rng), l2 = w(rng), l3 = w(rng);
        const double t = l1 + l2 + l3;
        const Point x = (l1 / t) * h.corner(1) + (l2 / t) * h.corner(2) + (l3 / t) * h.corner(3);
        EXPECT_EQ(cone_of(s, apex, x), (ConeId{Polarity::positive, c.index}));
      }
    }
  }
}

TEST(SmallestHomothet, ScaleMonotone) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const auto& a : testing::standard_shapes()) {
    const TriangleShape s = canonical_triangle(a.theta1, a.theta2);
    int checked = 0;
    while (checked < 500) {
      const Point p{u(rng), u(rng)};
      const Point v{u(rng), u(rng)};
      const Point x{u(rng), u(rng)};
      const ConeId cv = cone_of(s, p, v);
      if (!cv.positive() || cone_of(s, p, x) != cv) continue;
      Homothet hv = smallest_homothet(s, p, v);
      Homothet hx = smallest_homothet(s, p, x);
      Point near = v, far = x;
      if (hv.scale > hx.scale) {
        std::swap(hv, hx);
        std::swap(near, far);
      }
      EXPECT_TRUE(homothet_contains(hx, near, Containment::closed));
      ++checked;
    }
  }
}

TEST(HomothetContains, Examples) {
  const TriangleShape s = canonical_triangle(kPi / 4, kPi / 3);
  const Homothet h = homothet_at(s, {0, 0}, 1, 1.0);
  const Point centroid = (1.0 / 3) * (h.corner(1) + h.corner(2) + h.corner(3));
  EXPECT_TRUE(homothet_contains(h, centroid, Containment::open));
  EXPECT_TRUE(homothet_contains(h, centroid, Containment::closed));
  for (int i = 1; i <= 3; ++i) {
    EXPECT_FALSE(homothet_contains(h, h.corner(i), Containment::open));
    EXPECT_TRUE(homothet_contains(h, h.corner(i), Containment::closed));
  }
  EXPECT_FALSE(homothet_contains(h, {0.5, -1.0}, Containment::closed));
}

TEST(Wrap, ModuloThree) {
  EXPECT_EQ(wrap(4), 1);
  EXPECT_EQ(wrap(0), 3);
  EXPECT_EQ(wrap(-1), 2);
  EXPECT_EQ(wrap(2), 2);
}

}  // namespace
}  // namespace tdroute
