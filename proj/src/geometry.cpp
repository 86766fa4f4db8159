#include "tdroute/geometry.hpp"

#include <numbers>
#include <sstream>

namespace tdroute {

namespace {

// Slack on the angle-ordering checks so that decimal inputs such as
// 1.0471975512 still describe the equilateral triangle.
constexpr double kAngleOrderSlack = 1e-9;

Point unit(Point d) {
  const double n = norm(d);
  return {d.x / n, d.y / n};
}

}  // namespace

TriangleShape canonical_triangle(double theta1, double theta2) {
  const double pi = std::numbers::pi;
  if (!(theta1 > 0.0) || !(theta2 > 0.0) || !std::isfinite(theta1) || !std::isfinite(theta2)) {
    throw InvalidShapeError("triangle angles must be positive and finite");
  }
  if (!(theta1 + theta2 < pi)) {
    throw InvalidShapeError("theta1 + theta2 must be less than pi");
  }
  const double theta3 = pi - theta1 - theta2;
  if (theta1 > theta2 + kAngleOrderSlack) {
    std::ostringstream os;
    os << "angle ordering violated: theta1 <= theta2 required (theta1 = " << theta1
       << ", theta2 = " << theta2 << ")";
    throw InvalidShapeError(os.str());
  }
  if (theta2 > theta3 + kAngleOrderSlack) {
    std::ostringstream os;
    os << "angle ordering violated: theta2 <= theta3 = pi - theta1 - theta2 required (theta2 = "
       << theta2 << ", theta3 = " << theta3 << ")";
    throw InvalidShapeError(os.str());
  }

  TriangleShape t;
  t.theta_ = {theta1, theta2, theta3};
  // |tau1 tau3| by the law of sines with |tau1 tau2| = 1.
  const double r = std::sin(theta2) / std::sin(theta3);
  t.corners_ = {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{r * std::cos(theta1), r * std::sin(theta1)}};

  for (int i = 1; i <= 3; ++i) {
    const Point apex = t.corner(i);
    const Point e1 = t.corner(i + 1) - apex;
    const Point e2 = t.corner(i - 1) - apex;
    t.rays_[i - 1] = {unit(e1), unit(e2)};
    t.bases_[i - 1] = ConeBasis{e1, e2, 1.0 / cross(e1, e2)};
    t.sides_[i - 1] = unit(t.corner(i + 1) - t.corner(i));
  }
  return t;
}

std::string to_string(ConeId c) {
  return std::string(c.positive() ? "C" : "~C") + std::to_string(c.index);
}

int parallel_side(const TriangleShape& shape, Point d) {
  const double tol2 = kParallelTolerance * kParallelTolerance;
  const double len2 = d.x * d.x + d.y * d.y;
  for (int k = 1; k <= 3; ++k) {
    const Point s = shape.side_direction(k);
    const double c = s.x * d.y - s.y * d.x;
    if (c * c <= tol2 * len2) return k;
  }
  return 0;
}

ConeId cone_of(const TriangleShape& shape, Point p, Point q) {
  const Point d = q - p;
  if (d.x == 0.0 && d.y == 0.0) {
    throw DegenerateInputError("cone_of: the two points coincide");
  }
  if (const int k = parallel_side(shape, d); k != 0) {
    std::ostringstream os;
    os << "general position violated: direction (" << d.x << ", " << d.y
       << ") is parallel to side " << k;
    throw GeneralPositionError(os.str());
  }
  for (int i = 1; i <= 3; ++i) {
    const ConeBasis& b = shape.basis(i);
    const double a = b.first(d);
    const double c = b.second(d);
    if (a > 0.0 && c > 0.0) return {Polarity::positive, i};
    if (a < 0.0 && c < 0.0) return {Polarity::negative, i};
  }
  // Only reachable when rounding puts d on a cone boundary.
  throw GeneralPositionError("cone_of: direction lies on a cone boundary");
}

Homothet homothet_at(const TriangleShape& shape, Point apex, int corner, double scale) {
  Homothet h;
  h.scale = scale;
  h.pinned_corner = wrap(corner);
  const Point base = shape.corner(corner);
  for (int k = 1; k <= 3; ++k) {
    h.corners[k - 1] = apex + scale * (shape.corner(k) - base);
  }
  h.corner_point = apex;
  h.edge_point = apex;
  return h;
}

Homothet smallest_homothet(const TriangleShape& shape, Point u, Point v) {
  const ConeId c = cone_of(shape, u, v);
  // Always measure from the point that ends up on the corner so that the
  // result does not depend on argument order.
  const Point apex = c.positive() ? u : v;
  const Point other = c.positive() ? v : u;
  const ConeBasis& b = shape.basis(c.index);
  const Point d = other - apex;
  Homothet h = homothet_at(shape, apex, c.index, b.first(d) + b.second(d));
  h.edge_point = other;
  return h;
}

std::array<double, 3> barycentric(const Homothet& h, Point q) {
  const Point a = h.corners[0] - q;
  const Point b = h.corners[1] - q;
  const Point c = h.corners[2] - q;
  const double area2 = cross(h.corners[1] - h.corners[0], h.corners[2] - h.corners[0]);
  return {cross(b, c) / area2, cross(c, a) / area2, cross(a, b) / area2};
}

bool homothet_contains(const Homothet& h, Point q, Containment mode) {
  if (!(h.scale > 0.0)) {
    return mode == Containment::closed && q == h.corner_point;
  }
  const auto l = barycentric(h, q);
  if (mode == Containment::open) {
    return l[0] > 0.0 && l[1] > 0.0 && l[2] > 0.0;
  }
  return l[0] >= -kBoundaryTolerance && l[1] >= -kBoundaryTolerance &&
         l[2] >= -kBoundaryTolerance;
}

}  // namespace tdroute
