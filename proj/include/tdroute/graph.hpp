#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tdroute/geometry.hpp"

namespace tdroute {

using VertexId = std::size_t;

// Vertex set; the list index is the vertex id. `general_position` is set only
// by require_general_position() and perturb().
struct PointSet {
  std::vector<Point> points;
  bool general_position = false;

  std::size_t size() const { return points.size(); }
  const Point& operator[](VertexId v) const { return points[v]; }
};

PointSet make_point_set(std::vector<Point> points);

// Length of the bounding-box diagonal.
double diameter(std::span<const Point> points);

struct PositionViolation {
  VertexId a = 0;
  VertexId b = 0;
  // Side k (tau_k tau_{k+1}) the pair is parallel to; 0 when the points coincide.
  int side = 0;

  friend bool operator==(const PositionViolation&, const PositionViolation&) = default;
};

struct ValidationReport {
  std::vector<PositionViolation> violations;

  bool valid() const { return violations.empty(); }
};

ValidationReport validate_general_position(const TriangleShape& shape, const PointSet& pts);

// Returns pts flagged as validated, or throws GeneralPositionError naming the
// first offending pair.
PointSet require_general_position(const TriangleShape& shape, PointSet pts);

inline constexpr int kPerturbRetries = 100;

// Displaces every point by a deterministic offset of length at most
// magnitude * diameter(pts), retrying with fresh draws from the same stream
// until the result is in general position.
PointSet perturb(const TriangleShape& shape, const PointSet& pts, std::uint64_t seed,
                 double magnitude);

// Relative tolerance on homothet scales below which two candidates in the
// same cone count as tied.
inline constexpr double kTieTolerance = 1e-12;

// Directed edge u -> v where v is u's nearest neighbour in positive cone i.
struct ConeEdge {
  VertexId from = 0;
  int cone = 1;
  VertexId to = 0;

  friend auto operator<=>(const ConeEdge&, const ConeEdge&) = default;
};

class TDGraph {
 public:
  using ConeSlots = std::array<std::optional<VertexId>, 3>;

  // Checks that every listed target lies in the named cone of its source.
  TDGraph(TriangleShape shape, PointSet points, std::vector<ConeSlots> cone_edges);

  const TriangleShape& shape() const { return shape_; }
  const PointSet& points() const { return points_; }
  Point position(VertexId v) const { return points_.points[v]; }
  std::size_t size() const { return points_.size(); }

  std::optional<VertexId> cone_edge(VertexId u, int cone) const {
    return cone_edges_[u][wrap(cone) - 1];
  }
  const std::vector<ConeSlots>& cone_edges() const { return cone_edges_; }
  // Sorted undirected neighbours (out- and in-edges).
  std::span<const VertexId> neighbours(VertexId u) const { return adjacency_[u]; }
  bool adjacent(VertexId u, VertexId v) const;

  std::vector<ConeEdge> directed_edges() const;
  // Undirected edges as (min, max) pairs, sorted.
  std::vector<std::pair<VertexId, VertexId>> undirected_edges() const;

  // Same directed edge sets (geometry is not compared).
  bool same_edges(const TDGraph& other) const { return cone_edges_ == other.cone_edges_; }

 private:
  TriangleShape shape_;
  PointSet points_;
  std::vector<ConeSlots> cone_edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

// Nearest-in-cone construction, O(n^2), on the dispatched SIMD kernels.
TDGraph build_sweep(const TriangleShape& shape, const PointSet& pts);

// Empty-homothet construction, O(n^3): u -> v in cone i iff v is in C_{u,i}
// and the open smallest homothet of u, v holds no other point.
TDGraph build_empty_homothet_oracle(const TriangleShape& shape, const PointSet& pts);

bool is_connected(const TDGraph& g);

// First pair of undirected edges that cross at a point interior to both, if
// any. O(m^2); meant for small instances.
std::optional<std::pair<std::pair<VertexId, VertexId>, std::pair<VertexId, VertexId>>>
find_crossing(const TDGraph& g);

}  // namespace tdroute
