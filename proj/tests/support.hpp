#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "tdroute/geometry.hpp"
#include "tdroute/graph.hpp"

namespace tdroute::testing {

struct ShapeAngles {
  double theta1;
  double theta2;
  const char* name;
};

inline constexpr double kPi = std::numbers::pi;

inline const std::vector<ShapeAngles>& standard_shapes() {
  static const std::vector<ShapeAngles> shapes{
      {kPi / 3, kPi / 3, "equilateral"},
      {kPi / 6, kPi / 5, "pi6_pi5"},
      {kPi / 4, kPi / 3, "pi4_pi3"},
  };
  return shapes;
}

inline std::vector<Point> uniform_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> pts(n);
  for (Point& p : pts) {
    p.x = u(rng);
    p.y = u(rng);
  }
  return pts;
}

// n uniform points in the unit square, validated, or nudged by 1e-9 of the
// diameter when the raw draw is not in general position.
inline PointSet random_instance(const TriangleShape& shape, std::size_t n, std::uint64_t seed) {
  PointSet raw = make_point_set(uniform_points(n, seed));
  if (validate_general_position(shape, raw).valid()) {
    return require_general_position(shape, std::move(raw));
  }
  return perturb(shape, raw, seed, 1e-9);
}

}  // namespace tdroute::testing
