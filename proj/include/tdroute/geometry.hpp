#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "tdroute/error.hpp"

namespace tdroute {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(Point a) { return {-a.x, -a.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

// Corner and cone indices are 1-based and taken modulo 3: wrap(4) == 1,
// wrap(0) == 3.
constexpr int wrap(int i) { return ((i - 1) % 3 + 3) % 3 + 1; }

// Angular tolerance (radians) below which a direction counts as parallel to a
// side of the triangle.
inline constexpr double kParallelTolerance = 1e-12;
// Absolute slack on barycentric coordinates for closed-mode containment.
inline constexpr double kBoundaryTolerance = 1e-9;

// Coordinates of a direction in the basis spanning one positive cone:
// d = a * (tau_{i+1} - tau_i) + b * (tau_{i-1} - tau_i).
struct ConeBasis {
  Point e1;
  Point e2;
  double inv_det = 0.0;

  double first(Point d) const { return (d.x * e2.y - d.y * e2.x) * inv_det; }
  double second(Point d) const { return (e1.x * d.y - e1.y * d.x) * inv_det; }
};

// The fixed triangle with angles theta1 <= theta2 <= theta3 in canonical
// placement: tau1 = (0,0), tau2 = (1,0), tau3 above the x-axis.
class TriangleShape {
 public:
  double theta(int i) const { return theta_[wrap(i) - 1]; }
  Point corner(int i) const { return corners_[wrap(i) - 1]; }
  // Unit rays bounding positive cone i: towards tau_{i+1} and tau_{i-1}.
  const std::array<Point, 2>& cone_rays(int i) const { return rays_[wrap(i) - 1]; }
  const ConeBasis& basis(int i) const { return bases_[wrap(i) - 1]; }
  // Unit direction of side k, from tau_k to tau_{k+1}.
  Point side_direction(int k) const { return sides_[wrap(k) - 1]; }

  friend TriangleShape canonical_triangle(double theta1, double theta2);

 private:
  TriangleShape() = default;

  std::array<double, 3> theta_{};
  std::array<Point, 3> corners_{};
  std::array<std::array<Point, 2>, 3> rays_{};
  std::array<ConeBasis, 3> bases_{};
  std::array<Point, 3> sides_{};
};

TriangleShape canonical_triangle(double theta1, double theta2);

enum class Polarity : std::uint8_t { positive, negative };

struct ConeId {
  Polarity polarity = Polarity::positive;
  int index = 1;

  bool positive() const { return polarity == Polarity::positive; }
  friend bool operator==(const ConeId&, const ConeId&) = default;
};

std::string to_string(ConeId c);

// Side k (1..3) that d is parallel to within kParallelTolerance, or 0.
int parallel_side(const TriangleShape& shape, Point d);

// Cone of p containing q. Throws DegenerateInputError when p == q and
// GeneralPositionError when q - p is parallel to a side of the triangle.
ConeId cone_of(const TriangleShape& shape, Point p, Point q);

// A scaled translate of the triangle. corner_point sits on corner
// pinned_corner, edge_point on the opposite side.
struct Homothet {
  double scale = 0.0;
  std::array<Point, 3> corners{};
  int pinned_corner = 1;
  Point corner_point;
  Point edge_point;

  Point corner(int i) const { return corners[wrap(i) - 1]; }
  friend bool operator==(const Homothet&, const Homothet&) = default;
};

// apex + scale * (triangle - tau_corner).
Homothet homothet_at(const TriangleShape& shape, Point apex, int corner, double scale);

// Smallest scaled translate with u and v on its boundary. Symmetric in u, v.
Homothet smallest_homothet(const TriangleShape& shape, Point u, Point v);

enum class Containment : std::uint8_t { open, closed };

std::array<double, 3> barycentric(const Homothet& h, Point q);
bool homothet_contains(const Homothet& h, Point q, Containment mode);

}  // namespace tdroute
