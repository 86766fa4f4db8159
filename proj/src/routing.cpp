#include "tdroute/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace tdroute {

namespace {

// Side region cut out by the positive cone C_{p,i+k}, k = +-1. With t at
// corner i of T^{p,t} and p on the opposite side, C_{p,i+k} opens towards
// corner tau_{i-k}.
const Region& side_region(const RegionSet& r, int k) { return k > 0 ? r.right : r.left; }

bool near_boundary(const Homothet& h, Point q) {
  const auto l = barycentric(h, q);
  return std::any_of(l.begin(), l.end(),
                     [](double x) { return std::abs(x) <= kBoundaryTolerance; });
}

struct Analysis {
  RoutingCase kind = RoutingCase::positive_cone;
  int cone_index = 1;
  Homothet clip;
  Point p;
  Point t;
  // Case (i): p's out-neighbour in the cone holding t.
  std::optional<VertexId> forward;
  // Cases (ii)-(iv).
  RegionSet regions;
  std::vector<Neighbour> middle;

  Point corner(int j) const { return clip.corner(cone_index + j); }
  // |p tau_{i+j}| + |tau_{i+j} t|
  double detour(int j) const { return distance(p, corner(j)) + distance(corner(j), t); }
  // |p tau_{i+j}| + |tau_{i+j} tau_{i-j}| + |tau_{i-j} t|
  double long_detour(int j) const {
    return distance(p, corner(j)) + distance(corner(j), corner(-j)) + distance(corner(-j), t);
  }
};

Analysis analyse(const TriangleShape& shape, const LocalView& view, Point target) {
  Analysis a;
  a.p = view.position;
  a.t = target;
  const ConeId c = cone_of(shape, view.position, target);
  a.cone_index = c.index;
  a.clip = smallest_homothet(shape, view.position, target);
  if (c.positive()) {
    a.kind = RoutingCase::positive_cone;
    for (const Neighbour& n : view.neighbours) {
      if (cone_of(shape, view.position, n.position) == c) {
        a.forward = n.id;
        break;
      }
    }
    return a;
  }

  RegionSet& r = a.regions;
  r.cone_index = c.index;
  r.clip = a.clip;
  r.left.cone = {Polarity::positive, wrap(c.index - 1)};
  r.right.cone = {Polarity::positive, wrap(c.index + 1)};
  r.middle_cone = c;
  for (const Neighbour& n : view.neighbours) {
    const ConeId nc = cone_of(shape, view.position, n.position);
    Region* side = nullptr;
    if (nc == r.left.cone) {
      side = &r.left;
    } else if (nc == r.right.cone) {
      side = &r.right;
    } else if (nc != r.middle_cone) {
      continue;
    }
    if (!homothet_contains(r.clip, n.position, Containment::closed)) continue;
    if (n.position != target && near_boundary(r.clip, n.position)) r.ambiguous = true;
    if (side != nullptr) {
      side->occupied = true;
      side->occupant = n.id;
    } else {
      a.middle.push_back(n);
    }
  }
  std::sort(a.middle.begin(), a.middle.end(),
            [](const Neighbour& x, const Neighbour& y) { return x.id < y.id; });
  for (const Neighbour& n : a.middle) r.middle.push_back(n.id);

  const int empty = (r.left.occupied ? 0 : 1) + (r.right.occupied ? 0 : 1);
  a.kind = empty == 2   ? RoutingCase::both_empty
           : empty == 1 ? RoutingCase::one_empty
                        : RoutingCase::both_occupied;
  return a;
}

// Middle neighbour angularly closest to C_{p,i+j}; the shared boundary ray
// has direction tau_i - tau_{i+j}. Moving along it keeps the detour through
// tau_{i+j} tight.
std::optional<VertexId> closest_in_middle(const TriangleShape& shape, const Analysis& a, int j) {
  const Point ray = shape.corner(a.cone_index) - shape.corner(a.cone_index + j);
  std::optional<VertexId> best;
  double best_angle = std::numeric_limits<double>::infinity();
  for (const Neighbour& n : a.middle) {
    const Point d = n.position - a.p;
    const double angle = std::atan2(std::abs(cross(ray, d)), dot(ray, d));
    if (angle < best_angle) {
      best_angle = angle;
      best = n.id;
    }
  }
  return best;
}

int pick_side(const Analysis& a, Thresholds thresholds) {
  if (thresholds == Thresholds::midpoint) {
    return distance(a.p, a.corner(1)) <= distance(a.p, a.corner(-1)) ? 1 : -1;
  }
  if (a.kind == RoutingCase::both_empty) return a.detour(1) <= a.detour(-1) ? 1 : -1;
  return a.long_detour(1) <= a.long_detour(-1) ? 1 : -1;
}

[[noreturn]] void missing(const char* what, VertexId p) {
  throw GraphIntegrityError(std::string("route_step: ") + what + " at vertex " +
                            std::to_string(p));
}

StepDecision decide(const TriangleShape& shape, const LocalView& view, const Analysis& a,
                    Thresholds thresholds) {
  switch (a.kind) {
    case RoutingCase::positive_cone:
      if (!a.forward) missing("no edge in the positive cone holding the target", view.id);
      return {*a.forward, a.kind, 0};

    case RoutingCase::both_empty: {
      const int j = pick_side(a, thresholds);
      const auto v = closest_in_middle(shape, a, j);
      if (!v) missing("both side regions empty and no neighbour in the middle region", view.id);
      return {*v, a.kind, j};
    }

    case RoutingCase::one_empty: {
      const int j = side_region(a.regions, 1).occupied ? -1 : 1;
      if (const auto v = closest_in_middle(shape, a, j)) return {*v, a.kind, j};
      return {*side_region(a.regions, -j).occupant, a.kind, j};
    }

    case RoutingCase::both_occupied: {
      const int j = pick_side(a, thresholds);
      if (const auto v = closest_in_middle(shape, a, j)) return {*v, a.kind, j};
      // The detour leaves through tau_{i+j}, which borders C_{p,i-j}.
      return {*side_region(a.regions, -j).occupant, a.kind, j};
    }
  }
  missing("unknown case", view.id);
}

double potential_of(const Analysis& a) {
  switch (a.kind) {
    case RoutingCase::positive_cone:
      return std::max(a.detour(1), a.detour(-1));
    case RoutingCase::both_empty:
      return std::min(a.detour(1), a.detour(-1));
    case RoutingCase::one_empty:
      return a.detour(side_region(a.regions, 1).occupied ? -1 : 1);
    case RoutingCase::both_occupied:
      return std::min(a.long_detour(1), a.long_detour(-1));
  }
  return 0.0;
}

bool allowed_transition(RoutingCase from, RoutingCase to) {
  switch (from) {
    case RoutingCase::positive_cone:
      return to != RoutingCase::both_occupied;
    case RoutingCase::both_empty:
    case RoutingCase::one_empty:
      return to == RoutingCase::both_empty || to == RoutingCase::one_empty;
    case RoutingCase::both_occupied:
      return to != RoutingCase::positive_cone;
  }
  return false;
}

RouteTrace walk(const TDGraph& g, VertexId s, VertexId t, Thresholds thresholds, bool verify) {
  const std::size_t n = g.size();
  if (s >= n || t >= n) throw PreconditionError("route: vertex id out of range");
  const TriangleShape& shape = g.shape();
  const double slack = kPotentialTolerance * diameter(g.points().points);
  const std::size_t limit = n * n;

  RouteTrace trace;
  trace.vertices.push_back(s);
  VertexId p = s;
  std::optional<double> carried;
  while (p != t) {
    if (trace.steps.size() >= limit) {
      throw StepLimitError("route " + std::to_string(s) + " -> " + std::to_string(t) +
                           " exceeded " + std::to_string(limit) + " steps");
    }
    const LocalView view = local_view(g, p);
    const Analysis a = analyse(shape, view, g.position(t));
    const StepDecision d = decide(shape, view, a, thresholds);
    const double phi = carried ? *carried : potential_of(a);
    const double length = distance(g.position(p), g.position(d.next));

    if (verify) {
      const double next_phi = potential(g, d.next, t);
      if (length + next_phi > phi + slack) {
        std::ostringstream os;
        os.precision(17);
        os << "potential check failed on step " << p << " -> " << d.next << " (case "
           << label(d.kind) << "): |pv| + phi(v) = " << length + next_phi
           << " > phi(p) = " << phi;
        throw VerificationError(os.str());
      }
      if (!trace.steps.empty() && !allowed_transition(trace.steps.back().kind, d.kind)) {
        throw VerificationError("case order violated at vertex " + std::to_string(p) +
                                ": case " + std::string(label(trace.steps.back().kind)) +
                                " followed by case " + std::string(label(d.kind)));
      }
      carried = next_phi;
    }

    trace.steps.push_back({p, d.next, d.kind, d.j, phi, length});
    trace.total_length += length;
    trace.vertices.push_back(d.next);
    p = d.next;
  }
  return trace;
}

}  // namespace

std::string_view label(RoutingCase c) {
  switch (c) {
    case RoutingCase::positive_cone:
      return "i";
    case RoutingCase::both_empty:
      return "ii";
    case RoutingCase::one_empty:
      return "iii";
    case RoutingCase::both_occupied:
      return "iv";
  }
  return "?";
}

LocalView local_view(const TDGraph& g, VertexId p) {
  LocalView view;
  view.id = p;
  view.position = g.position(p);
  for (VertexId v : g.neighbours(p)) view.neighbours.push_back({v, g.position(v)});
  return view;
}

RegionSet regions(const TriangleShape& shape, const LocalView& view, Point target) {
  if (cone_of(shape, view.position, target).positive()) {
    throw PreconditionError("regions: target lies in a positive cone of the current vertex");
  }
  return analyse(shape, view, target).regions;
}

RegionSet regions(const TDGraph& g, VertexId p, VertexId t) {
  return regions(g.shape(), local_view(g, p), g.position(t));
}

StepDecision route_step(const TriangleShape& shape, const LocalView& view, VertexId target,
                        Point target_position, Thresholds thresholds) {
  if (view.id == target) throw DegenerateInputError("route_step: already at the target");
  return decide(shape, view, analyse(shape, view, target_position), thresholds);
}

StepDecision route_step(const TDGraph& g, VertexId p, VertexId t, Thresholds thresholds) {
  return route_step(g.shape(), local_view(g, p), t, g.position(t), thresholds);
}

double potential(const TDGraph& g, VertexId p, VertexId t) {
  if (p == t) return 0.0;
  return potential_of(analyse(g.shape(), local_view(g, p), g.position(t)));
}

RouteTrace route(const TDGraph& g, VertexId s, VertexId t, bool verify) {
  return walk(g, s, t, Thresholds::optimal, verify);
}

RouteTrace affine_baseline_route(const TDGraph& g, VertexId s, VertexId t) {
  return walk(g, s, t, Thresholds::midpoint, false);
}

}  // namespace tdroute
