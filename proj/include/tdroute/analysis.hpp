#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tdroute/geometry.hpp"
#include "tdroute/graph.hpp"
#include "tdroute/routing.hpp"

namespace tdroute {

struct PairRatio {
  VertexId from = 0;
  VertexId to = 0;
  double ratio = 1.0;
};

struct RatioReport {
  // Max over measured pairs; 1 when there are none.
  double ratio = 1.0;
  std::optional<std::pair<VertexId, VertexId>> witness;
  std::vector<PairRatio> per_pair;
  // Routing only: maxima split by whether the target lies in a positive or a
  // negative cone of the source.
  double positive_ratio = 1.0;
  double negative_ratio = 1.0;
};

// Max over vertex pairs of shortest-path distance over Euclidean distance,
// by Dijkstra from every vertex. Throws GraphIntegrityError if disconnected.
RatioReport spanning_ratio(const TDGraph& g, bool keep_pairs = false);

enum class Router : std::uint8_t { optimal, affine_baseline };

// Max over ordered pairs of route length over Euclidean distance. The
// optimal router runs with potential verification on.
RatioReport routing_ratio_measured(const TDGraph& g, Router router, bool keep_pairs = false);

// 1 / sin(theta1 / 2).
double spanning_bound(double theta1);

struct BoundValue {
  double value = 0.0;
  int j = 1;
  double alpha = 0.0;
  std::size_t grid_samples = 0;
  double refinement_tolerance = 0.0;
};

inline constexpr std::size_t kBoundGridSamples = 10000;
inline constexpr double kBoundRefineTolerance = 1e-13;

// The expression maximised by c_theta for one corner j (1..3) and angle
// alpha in [0, theta_j].
double c_theta_term(const TriangleShape& shape, int j, double alpha);

// Tight routing ratio: max over j and alpha of c_theta_term, by a dense grid
// followed by golden-section refinement around the best sample.
BoundValue c_theta(double theta1, double theta2);

// Lower bound on the ratio of the midpoint-threshold router on the
// two-graph construction with apex angle alpha at tau3.
double baseline_ratio_expression(double theta1, double theta2, double alpha);

// Five points {a, b, tau1, tau2, tau3} whose graph forces the a-b shortest
// path through tau1.
struct SpanningInstance {
  PointSet points;
  VertexId a = 0;
  VertexId b = 1;
  VertexId tau1 = 2;
  VertexId tau2 = 3;
  VertexId tau3 = 4;
  double eps = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kAdversarialSeed = 1;

// eps in (0, 0.1): outward offset of a and b from the triangle sides, as a
// fraction of min(|tau1 tau2|, |tau1 tau3|). Verifies the forced edge set and
// throws ConstructionError if it does not hold.
SpanningInstance adversarial_spanning(const TriangleShape& shape, double eps,
                                      std::uint64_t seed = kAdversarialSeed);

// Two point sets whose graphs agree on the k-neighbourhood of s but leave the
// target with a single, different neighbour. Layout of both sets:
// [s, p_1..p_k, q_1..q_k, target] and, for the second set only, p_{k+1}
// appended last.
struct RoutingInstance {
  PointSet first;
  PointSet second;
  VertexId start = 0;
  VertexId target = 0;
  std::vector<VertexId> p;  // p_1..p_k (p_{k+1} is second.size() - 1)
  std::vector<VertexId> q;  // q_1..q_k
  int k = 0;
  int j = 3;              // corner of the triangle used as target
  double alpha = 0.0;     // angle at the target between tau_{j-1} and s
  double eps = 0.0;

  VertexId extra() const { return second.size() - 1; }
};

inline constexpr double kDefaultEps = 1e-5;

// Places the construction with target corner j and angle alpha; both default
// to the maximiser reported by c_theta. Verifies the edge lists of both graphs
// and throws ConstructionError on mismatch.
RoutingInstance adversarial_routing(const TriangleShape& shape, int k, double eps = kDefaultEps,
                                    std::optional<double> alpha = std::nullopt,
                                    std::optional<int> j = std::nullopt);

// Vertices within `hops` edges of `from`, sorted.
std::vector<VertexId> neighbourhood(const TDGraph& g, VertexId from, int hops);

// Length of the shortest s -> t path whose first edge is s -> first.
double forced_path_length(const TDGraph& g, VertexId s, VertexId first, VertexId t);

// Single-source shortest path lengths (Euclidean edge weights).
std::vector<double> shortest_paths(const TDGraph& g, VertexId source);

}  // namespace tdroute
