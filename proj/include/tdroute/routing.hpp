#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tdroute/geometry.hpp"
#include "tdroute/graph.hpp"

namespace tdroute {

// The four cases of the 1-local router.
//   positive_cone  (i):   t lies in a positive cone of p.
//   both_empty     (ii):  t in a negative cone, left and right regions empty.
//   one_empty      (iii): exactly one of the left/right regions is empty.
//   both_occupied  (iv):  both regions hold a neighbour of p.
enum class RoutingCase : std::uint8_t { positive_cone, both_empty, one_empty, both_occupied };

std::string_view label(RoutingCase c);

// Threshold rule for picking the side j in cases (ii) and (iv).
//   optimal:  minimise the corner detour through T^{p,t}.
//   midpoint: pick the corner of T^{p,t} nearer to p, which is what the
//             equilateral router does after an affine map to the
//             equilateral triangle.
enum class Thresholds : std::uint8_t { optimal, midpoint };

struct Neighbour {
  VertexId id = 0;
  Point position;
};

// Everything a 1-local, 0-memory router may look at when standing on p.
struct LocalView {
  VertexId id = 0;
  Point position;
  std::vector<Neighbour> neighbours;
};

LocalView local_view(const TDGraph& g, VertexId p);

struct Region {
  ConeId cone;
  bool occupied = false;
  // p's out-neighbour in `cone` when it lies in T^{p,t}.
  std::optional<VertexId> occupant;
};

// Regions of p towards a target t in the negative cone ~C_{p,i}:
// left = C_{p,i-1} ∩ T^{p,t}, right = C_{p,i+1} ∩ T^{p,t},
// middle = ~C_{p,i} ∩ T^{p,t}.
struct RegionSet {
  int cone_index = 1;
  Homothet clip;
  Region left;
  Region right;
  ConeId middle_cone;
  // Neighbours of p (in- and out-edges) inside the middle region, sorted.
  std::vector<VertexId> middle;
  // Some neighbour sat within kBoundaryTolerance of the boundary of T^{p,t}.
  bool ambiguous = false;
};

// Throws PreconditionError when t is in a positive cone of p.
RegionSet regions(const TriangleShape& shape, const LocalView& view, Point target);
RegionSet regions(const TDGraph& g, VertexId p, VertexId t);

struct StepDecision {
  VertexId next = 0;
  RoutingCase kind = RoutingCase::positive_cone;
  // Side chosen in cases (ii)-(iv): the bounding path of the potential runs
  // from p through corner tau_{i+j} of T^{p,t}. 0 in case (i).
  int j = 0;
};

// One routing decision from p towards t. Only the shape, p's local view and
// the target are visible here.
StepDecision route_step(const TriangleShape& shape, const LocalView& view, VertexId target,
                        Point target_position, Thresholds thresholds = Thresholds::optimal);
StepDecision route_step(const TDGraph& g, VertexId p, VertexId t,
                        Thresholds thresholds = Thresholds::optimal);

// Upper bound on the remaining route length from p to t; 0 when p == t.
double potential(const TDGraph& g, VertexId p, VertexId t);

struct RouteStep {
  VertexId from = 0;
  VertexId to = 0;
  RoutingCase kind = RoutingCase::positive_cone;
  int j = 0;
  double potential = 0.0;  // at `from`, before the step
  double length = 0.0;
};

struct RouteTrace {
  std::vector<VertexId> vertices;
  std::vector<RouteStep> steps;
  double total_length = 0.0;
};

// Relative (to the instance diameter) slack of the potential check.
inline constexpr double kPotentialTolerance = 1e-9;

// Routes s -> t with the optimal thresholds. With `verify`, every step must
// lower the potential by at least its length and respect the case order;
// violations throw VerificationError.
RouteTrace route(const TDGraph& g, VertexId s, VertexId t, bool verify = true);

// Same walk with midpoint thresholds. No potential guarantee applies.
RouteTrace affine_baseline_route(const TDGraph& g, VertexId s, VertexId t);

}  // namespace tdroute
