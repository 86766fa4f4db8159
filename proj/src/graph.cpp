#include "tdroute/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "tdroute/kernels.hpp"

namespace tdroute {

namespace {

struct Columns {
  std::vector<double> xs;
  std::vector<double> ys;
};

Columns columns(const PointSet& pts) {
  Columns c;
  c.xs.reserve(pts.size());
  c.ys.reserve(pts.size());
  for (const Point& p : pts.points) {
    c.xs.push_back(p.x);
    c.ys.push_back(p.y);
  }
  return c;
}

// Uniform double in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementation.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void require_validated(const PointSet& pts, const char* who) {
  if (!pts.general_position) {
    throw PreconditionError(std::string(who) +
                            ": point set has not been validated for general position");
  }
}

}  // namespace

PointSet make_point_set(std::vector<Point> points) {
  PointSet s;
  s.points = std::move(points);
  return s;
}

double diameter(std::span<const Point> points) {
  if (points.empty()) return 0.0;
  double lo_x = points[0].x, hi_x = points[0].x, lo_y = points[0].y, hi_y = points[0].y;
  for (const Point& p : points) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

ValidationReport validate_general_position(const TriangleShape& shape, const PointSet& pts) {
  ValidationReport report;
  const std::size_t n = pts.size();
  if (n < 2) return report;
  const kernels::ConeTable table = kernels::cone_table(shape);
  const Columns c = columns(pts);
  std::vector<std::uint8_t> codes(n);
  for (VertexId p = 0; p + 1 < n; ++p) {
    const std::size_t rest = n - p - 1;
    std::span<std::uint8_t> out(codes.data(), rest);
    kernels::parallel_scan(table, c.xs[p], c.ys[p], std::span(c.xs).subspan(p + 1),
                           std::span(c.ys).subspan(p + 1), kParallelTolerance, out);
    for (std::size_t k = 0; k < rest; ++k) {
      if (out[k] == kernels::kFree) continue;
      const int side = out[k] == kernels::kCoincident ? 0 : out[k];
      report.violations.push_back({p, p + 1 + k, side});
    }
  }
  return report;
}

PointSet require_general_position(const TriangleShape& shape, PointSet pts) {
  const ValidationReport report = validate_general_position(shape, pts);
  if (!report.valid()) {
    const PositionViolation& v = report.violations.front();
    std::ostringstream os;
    os << "general position violated by " << report.violations.size() << " pair(s); first: ("
       << v.a << ", " << v.b << ") ";
    if (v.side == 0) {
      os << "coincide";
    } else {
      os << "parallel to side " << v.side;
    }
    throw GeneralPositionError(os.str());
  }
  pts.general_position = true;
  return pts;
}

PointSet perturb(const TriangleShape& shape, const PointSet& pts, std::uint64_t seed,
                 double magnitude) {
  if (!(magnitude > 0.0) || !std::isfinite(magnitude)) {
    throw PreconditionError("perturb: magnitude must be positive");
  }
  const double radius = magnitude * diameter(pts.points);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kPerturbRetries; ++attempt) {
    PointSet out;
    out.points.reserve(pts.size());
    for (const Point& p : pts.points) {
      const double r = radius * std::sqrt(unit_draw(rng));
      const double angle = 2.0 * std::numbers::pi * unit_draw(rng);
      out.points.push_back({p.x + r * std::cos(angle), p.y + r * std::sin(angle)});
    }
    if (validate_general_position(shape, out).valid()) {
      out.general_position = true;
      return out;
    }
  }
  throw PerturbationError("perturb: no general-position draw after " +
                          std::to_string(kPerturbRetries) + " attempts");
}

TDGraph::TDGraph(TriangleShape shape, PointSet points, std::vector<ConeSlots> cone_edges)
    : shape_(std::move(shape)),
      points_(std::move(points)),
      cone_edges_(std::move(cone_edges)),
      adjacency_(points_.size()) {
  const std::size_t n = points_.size();
  if (cone_edges_.size() != n) {
    throw GraphIntegrityError("cone edge table size does not match the vertex count");
  }
  for (VertexId u = 0; u < n; ++u) {
    for (int i = 1; i <= 3; ++i) {
      const auto v = cone_edges_[u][i - 1];
      if (!v) continue;
      if (*v >= n || *v == u) {
        throw GraphIntegrityError("cone edge " + std::to_string(u) + " -> " +
                                  std::to_string(*v) + " is out of range");
      }
      const ConeId c = cone_of(shape_, points_[u], points_[*v]);
      if (!(c.positive() && c.index == i)) {
        throw GraphIntegrityError("cone edge " + std::to_string(u) + " -> " +
                                  std::to_string(*v) + " does not lie in cone " +
                                  std::to_string(i));
      }
      adjacency_[u].push_back(*v);
      adjacency_[*v].push_back(u);
    }
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

bool TDGraph::adjacent(VertexId u, VertexId v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<ConeEdge> TDGraph::directed_edges() const {
  std::vector<ConeEdge> out;
  for (VertexId u = 0; u < size(); ++u) {
    for (int i = 1; i <= 3; ++i) {
      if (const auto v = cone_edges_[u][i - 1]) out.push_back({u, i, *v});
    }
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> TDGraph::undirected_edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

TDGraph build_sweep(const TriangleShape& shape, const PointSet& pts) {
  require_validated(pts, "build_sweep");
  const std::size_t n = pts.size();
  const kernels::ConeTable table = kernels::cone_table(shape);
  const Columns c = columns(pts);
  std::vector<TDGraph::ConeSlots> slots(n);
  for (VertexId u = 0; u < n; ++u) {
    const kernels::NearestInCones r =
        kernels::nearest_in_cones(table, c.xs[u], c.ys[u], c.xs, c.ys, kTieTolerance);
    for (int i = 0; i < 3; ++i) {
      if (r.index[i] == kernels::kNone) continue;
      if (r.tie[i]) {
        throw GeneralPositionError("build_sweep: tie for the nearest neighbour of vertex " +
                                   std::to_string(u) + " in cone " + std::to_string(i + 1));
      }
      slots[u][i] = static_cast<VertexId>(r.index[i]);
    }
  }
  return TDGraph(shape, pts, std::move(slots));
}

TDGraph build_empty_homothet_oracle(const TriangleShape& shape, const PointSet& pts) {
  require_validated(pts, "build_empty_homothet_oracle");
  const std::size_t n = pts.size();
  std::vector<TDGraph::ConeSlots> slots(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v) continue;
      const ConeId c = cone_of(shape, pts[u], pts[v]);
      if (!c.positive()) continue;
      const Homothet h = smallest_homothet(shape, pts[u], pts[v]);
      bool empty = true;
      for (VertexId w = 0; w < n && empty; ++w) {
        if (w == u || w == v) continue;
        empty = !homothet_contains(h, pts[w], Containment::open);
      }
      if (!empty) continue;
      auto& slot = slots[u][c.index - 1];
      if (slot) {
        throw GeneralPositionError("oracle: two empty homothets from vertex " +
                                   std::to_string(u) + " in cone " + std::to_string(c.index));
      }
      slot = v;
    }
  }
  return TDGraph(shape, pts, std::move(slots));
}

bool is_connected(const TDGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : g.neighbours(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

std::optional<std::pair<std::pair<VertexId, VertexId>, std::pair<VertexId, VertexId>>>
find_crossing(const TDGraph& g) {
  const auto edges = g.undirected_edges();
  auto orient = [&](VertexId a, VertexId b, VertexId c) {
    return cross(g.position(b) - g.position(a), g.position(c) - g.position(a));
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const auto [c, d] = edges[f];
      if (a == c || a == d || b == c || b == d) continue;
      const double o1 = orient(a, b, c);
      const double o2 = orient(a, b, d);
      const double o3 = orient(c, d, a);
      const double o4 = orient(c, d, b);
      if (o1 * o2 < 0.0 && o3 * o4 < 0.0) return std::make_pair(edges[e], edges[f]);
    }
  }
  return std::nullopt;
}

}  // namespace tdroute
