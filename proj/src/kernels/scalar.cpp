#include <limits>

#include "tdroute/kernels.hpp"

namespace tdroute::kernels::scalar {

NearestInCones nearest_in_cones(const ConeTable& t, double ux, double uy,
                                std::span<const double> xs, std::span<const double> ys,
                                double tie_tolerance) {
  NearestInCones r;
  std::array<double, 3> best;
  best.fill(std::numeric_limits<double>::infinity());
  const std::size_t n = xs.size();

  for (std::size_t k = 0; k < n; ++k) {
    const double dx = xs[k] - ux;
    const double dy = ys[k] - uy;
    for (int c = 0; c < 3; ++c) {
      const double a = (dx * t.e2y[c] - dy * t.e2x[c]) * t.inv[c];
      const double b = (t.e1x[c] * dy - t.e1y[c] * dx) * t.inv[c];
      if (a > 0.0 && b > 0.0) {
        const double s = a + b;
        if (s < best[c]) {
          best[c] = s;
          r.index[c] = static_cast<std::int64_t>(k);
        }
      }
    }
  }

  for (int c = 0; c < 3; ++c) {
    if (r.index[c] == kNone) continue;
    r.scale[c] = best[c];
    const double limit = best[c] + best[c] * tie_tolerance;
    int within = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const double dx = xs[k] - ux;
      const double dy = ys[k] - uy;
      const double a = (dx * t.e2y[c] - dy * t.e2x[c]) * t.inv[c];
      const double b = (t.e1x[c] * dy - t.e1y[c] * dx) * t.inv[c];
      if (a > 0.0 && b > 0.0 && a + b <= limit) ++within;
    }
    r.tie[c] = within > 1;
  }
  return r;
}

void parallel_scan(const ConeTable& t, double px, double py, std::span<const double> xs,
                   std::span<const double> ys, double tolerance, std::span<std::uint8_t> out) {
  const double tol2 = tolerance * tolerance;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double dx = xs[k] - px;
    const double dy = ys[k] - py;
    if (dx == 0.0 && dy == 0.0) {
      out[k] = kCoincident;
      continue;
    }
    const double len2 = dx * dx + dy * dy;
    std::uint8_t code = kFree;
    for (int s = 0; s < 3; ++s) {
      const double c = t.sx[s] * dy - t.sy[s] * dx;
      if (c * c <= tol2 * len2) {
        code = static_cast<std::uint8_t>(s + 1);
        break;
      }
    }
    out[k] = code;
  }
}

}  // namespace tdroute::kernels::scalar
