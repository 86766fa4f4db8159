#include "tdroute/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <set>
#include <sstream>

namespace tdroute {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Point unit(Point d) { return (1.0 / norm(d)) * d; }

using EdgeSet = std::set<std::pair<VertexId, VertexId>>;

void add_edge(EdgeSet& set, VertexId a, VertexId b) { set.emplace(std::min(a, b), std::max(a, b)); }

void expect_edges(const TDGraph& g, const EdgeSet& expected, const char* name) {
  const auto actual_list = g.undirected_edges();
  const EdgeSet actual(actual_list.begin(), actual_list.end());
  if (actual == expected) return;
  std::ostringstream os;
  os << name << ": edge set differs from the construction;";
  for (const auto& e : expected) {
    if (!actual.count(e)) os << " missing " << e.first << "-" << e.second << ";";
  }
  for (const auto& e : actual) {
    if (!expected.count(e)) os << " unexpected " << e.first << "-" << e.second << ";";
  }
  throw ConstructionError(os.str());
}

}  // namespace

std::vector<double> shortest_paths(const TDGraph& g, VertexId source) {
  std::vector<double> dist(g.size(), kInf);
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (VertexId v : g.neighbours(u)) {
      const double nd = d + distance(g.position(u), g.position(v));
      if (nd < dist[v]) {
        dist[v] = nd;
        queue.emplace(nd, v);
      }
    }
  }
  return dist;
}

RatioReport spanning_ratio(const TDGraph& g, bool keep_pairs) {
  RatioReport report;
  const std::size_t n = g.size();
  for (VertexId u = 0; u < n; ++u) {
    const std::vector<double> dist = shortest_paths(g, u);
    for (VertexId v = u + 1; v < n; ++v) {
      if (!std::isfinite(dist[v])) {
        throw GraphIntegrityError("spanning_ratio: graph is disconnected (" + std::to_string(u) +
                                  " cannot reach " + std::to_string(v) + ")");
      }
      const double r = dist[v] / distance(g.position(u), g.position(v));
      if (keep_pairs) report.per_pair.push_back({u, v, r});
      if (!report.witness || r > report.ratio) {
        report.ratio = r;
        report.witness = {u, v};
      }
    }
  }
  return report;
}

RatioReport routing_ratio_measured(const TDGraph& g, Router router, bool keep_pairs) {
  RatioReport report;
  const std::size_t n = g.size();
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = 0; t < n; ++t) {
      if (s == t) continue;
      const RouteTrace trace =
          router == Router::optimal ? route(g, s, t, true) : affine_baseline_route(g, s, t);
      const double r = trace.total_length / distance(g.position(s), g.position(t));
      if (keep_pairs) report.per_pair.push_back({s, t, r});
      if (!report.witness || r > report.ratio) {
        report.ratio = r;
        report.witness = {s, t};
      }
      if (cone_of(g.shape(), g.position(s), g.position(t)).positive()) {
        report.positive_ratio = std::max(report.positive_ratio, r);
      } else {
        report.negative_ratio = std::max(report.negative_ratio, r);
      }
    }
  }
  return report;
}

double spanning_bound(double theta1) {
  if (!(theta1 > 0.0) || theta1 > std::numbers::pi / 3.0 + 1e-9) {
    throw InvalidShapeError("spanning_bound: theta1 must lie in (0, pi/3]");
  }
  return 1.0 / std::sin(theta1 / 2.0);
}

double c_theta_term(const TriangleShape& shape, int j, double alpha) {
  const double tj = shape.theta(j);
  const double next = std::sin(shape.theta(j + 1));
  const double prev = std::sin(shape.theta(j - 1));
  const double far = std::sin(alpha + shape.theta(j - 1));
  const double head = std::sin(tj - alpha) / next + std::sin(alpha) / prev;
  return head + std::min(std::sin(alpha) / prev + far / next, std::sin(tj - alpha) / next + far / prev);
}

BoundValue c_theta(double theta1, double theta2) {
  const TriangleShape shape = canonical_triangle(theta1, theta2);
  BoundValue best;
  best.value = -kInf;
  best.grid_samples = kBoundGridSamples;
  best.refinement_tolerance = kBoundRefineTolerance;
  std::size_t best_k = 0;
  for (int j = 1; j <= 3; ++j) {
    const double span = shape.theta(j);
    for (std::size_t k = 0; k < kBoundGridSamples; ++k) {
      const double alpha = span * static_cast<double>(k) / static_cast<double>(kBoundGridSamples - 1);
      const double v = c_theta_term(shape, j, alpha);
      if (v > best.value) {
        best.value = v;
        best.j = j;
        best.alpha = alpha;
        best_k = k;
      }
    }
  }

  // Golden-section search on the bracket around the best sample.
  const double span = shape.theta(best.j);
  const double step = span / static_cast<double>(kBoundGridSamples - 1);
  double lo = best_k == 0 ? 0.0 : best.alpha - step;
  double hi = best_k + 1 == kBoundGridSamples ? span : best.alpha + step;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double a) { return c_theta_term(shape, best.j, a); };
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > kBoundRefineTolerance) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    }
  }
  for (double alpha : {lo, x1, 0.5 * (lo + hi), x2, hi}) {
    const double refined = f(alpha);
    if (refined > best.value) {
      best.value = refined;
      best.alpha = alpha;
    }
  }
  return best;
}

double baseline_ratio_expression(double theta1, double theta2, double alpha) {
  const TriangleShape shape = canonical_triangle(theta1, theta2);
  const double theta3 = shape.theta(3);
  if (!(alpha >= 0.0) || alpha > theta3) {
    throw PreconditionError("baseline_ratio_expression: alpha must lie in [0, theta3]");
  }
  const double s1 = std::sin(theta1);
  const double s2 = std::sin(theta2);
  return std::sin(theta3 - alpha) / s1 + std::sin(alpha) / s2 + std::sin(alpha) / s2 +
         std::sin(alpha + theta2) / s1;
}

SpanningInstance adversarial_spanning(const TriangleShape& shape, double eps, std::uint64_t seed) {
  if (!(eps > 0.0) || !(eps < 0.1)) {
    throw PreconditionError("adversarial_spanning: eps must lie in (0, 0.1)");
  }
  const Point t1 = shape.corner(1);
  const Point t2 = shape.corner(2);
  const Point t3 = shape.corner(3);
  const double m = std::min(distance(t1, t2), distance(t1, t3));
  const Point along12 = unit(t2 - t1);
  const Point along13 = unit(t3 - t1);
  // Outward normals: away from the opposite corner.
  const Point out12{along12.y, -along12.x};
  const Point out13{-along13.y, along13.x};
  const Point a = t1 + (m / 2.0) * along12 + (eps * m) * out12;
  const Point b = t1 + (m / 2.0) * along13 + (eps * m) * out13;

  SpanningInstance inst;
  inst.eps = eps;
  inst.seed = seed;
  inst.points = perturb(shape, make_point_set({a, b, t1, t2, t3}), seed, eps * 1e-3);

  const TDGraph g = build_sweep(shape, inst.points);
  const std::pair<VertexId, VertexId> required[] = {
      {inst.tau1, inst.tau2}, {inst.tau2, inst.tau3}, {inst.tau1, inst.tau3}, {inst.tau1, inst.a},
      {inst.tau2, inst.a},    {inst.tau1, inst.b},    {inst.tau3, inst.b}};
  for (const auto& [x, y] : required) {
    if (!g.adjacent(x, y)) {
      throw ConstructionError("adversarial_spanning: expected edge " + std::to_string(x) + "-" +
                              std::to_string(y) + " is missing");
    }
  }
  if (g.adjacent(inst.a, inst.b)) {
    throw ConstructionError("adversarial_spanning: unexpected edge a-b");
  }
  return inst;
}

RoutingInstance adversarial_routing(const TriangleShape& shape, int k, double eps,
                                    std::optional<double> alpha, std::optional<int> j) {
  if (k < 1) throw PreconditionError("adversarial_routing: k must be positive");
  if (!(eps > 0.0) || !(eps < 0.1)) {
    throw PreconditionError("adversarial_routing: eps must lie in (0, 0.1)");
  }
  if (!alpha || !j) {
    const BoundValue bound = c_theta(shape.theta(1), shape.theta(2));
    if (!j) j = bound.j;
    if (!alpha) alpha = bound.alpha;
  }
  const int corner = wrap(*j);
  const double span = shape.theta(corner);
  if (!(*alpha > 0.0) || !(*alpha < span)) {
    throw PreconditionError("adversarial_routing: alpha must lie strictly inside (0, theta_j)");
  }

  // Target T = tau_j; the p-chain hugs B = tau_{j-1}, the q-chain hugs
  // A = tau_{j+1}; s sits on AB with angle alpha between TB and Ts.
  const Point target = shape.corner(corner);
  const Point b_corner = shape.corner(corner - 1);
  const Point a_corner = shape.corner(corner + 1);
  const double angle_b = shape.theta(corner - 1);
  const double angle_a = shape.theta(corner + 1);
  const double bs = distance(b_corner, target) * std::sin(*alpha) / std::sin(*alpha + angle_b);
  const Point s = b_corner + (bs / distance(b_corner, a_corner)) * (a_corner - b_corner);

  const Point base = unit(a_corner - b_corner);
  Point inward{-base.y, base.x};
  if (dot(inward, target - b_corner) < 0.0) inward = -inward;
  auto height = [&](Point x) { return dot(x - b_corner, inward); };

  const double h1 = eps * std::min(std::sin(angle_a / 2.0), std::sin(angle_b / 2.0)) / 4.0;
  const Point bisector_b = unit(unit(a_corner - b_corner) + unit(target - b_corner));
  const Point bisector_a = unit(unit(b_corner - a_corner) + unit(target - a_corner));
  const Point p1 = b_corner + (h1 / std::sin(angle_b / 2.0)) * bisector_b;
  const Point q1 = a_corner + (2.0 * h1 / std::sin(angle_a / 2.0)) * bisector_a;
  // p2 on segment T p1, strictly above q1.
  const double lambda = 2.0 * h1 / (height(target) - h1);
  const double shrink = 1.0 - lambda;

  // Spiral similarity centred at T mapping p1 to p2 (a pure scaling here, as
  // p2 lies on T p1); it maps (p_i, q_i) to (p_{i+1}, q_{i+1}).
  auto next = [&](Point x) { return target + shrink * (x - target); };
  std::vector<Point> ps{p1};
  std::vector<Point> qs{q1};
  for (int i = 1; i <= k; ++i) ps.push_back(next(ps.back()));
  for (int i = 1; i < k; ++i) qs.push_back(next(qs.back()));

  RoutingInstance inst;
  inst.k = k;
  inst.j = corner;
  inst.alpha = *alpha;
  inst.eps = eps;
  std::vector<Point> pts{s};
  for (int i = 0; i < k; ++i) {
    inst.p.push_back(pts.size());
    pts.push_back(ps[i]);
  }
  for (int i = 0; i < k; ++i) {
    inst.q.push_back(pts.size());
    pts.push_back(qs[i]);
  }
  inst.target = pts.size();
  pts.push_back(target);
  inst.start = 0;

  try {
    inst.first = require_general_position(shape, make_point_set(pts));
    pts.push_back(ps[k]);
    inst.second = require_general_position(shape, make_point_set(pts));
  } catch (const GeneralPositionError& e) {
    throw ConstructionError(std::string("adversarial_routing: ") + e.what());
  }

  EdgeSet common;
  const auto& P = inst.p;
  const auto& Q = inst.q;
  add_edge(common, inst.start, P[0]);
  add_edge(common, inst.start, Q[0]);
  add_edge(common, P[0], Q[0]);
  for (int i = 1; i < k; ++i) {
    add_edge(common, P[i - 1], P[i]);
    add_edge(common, Q[i - 1], Q[i]);
    add_edge(common, Q[i - 1], P[i]);
    add_edge(common, P[i], Q[i]);
  }
  EdgeSet first = common;
  add_edge(first, Q[k - 1], inst.target);
  EdgeSet second = common;
  const VertexId extra = inst.extra();
  add_edge(second, P[k - 1], extra);
  add_edge(second, Q[k - 1], extra);
  add_edge(second, extra, inst.target);

  // For very small eps the p-chain sits almost parallel to a side, so the
  // sigma gaps seen from s shrink like eps^2 and drop under the tie tolerance.
  try {
    expect_edges(build_sweep(shape, inst.first), first, "adversarial_routing (first graph)");
    expect_edges(build_sweep(shape, inst.second), second, "adversarial_routing (second graph)");
  } catch (const GeneralPositionError& e) {
    throw ConstructionError(std::string("adversarial_routing: eps too small, ") + e.what());
  }
  return inst;
}

std::vector<VertexId> neighbourhood(const TDGraph& g, VertexId from, int hops) {
  std::vector<int> depth(g.size(), -1);
  std::queue<VertexId> queue;
  depth[from] = 0;
  queue.push(from);
  std::vector<VertexId> out;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop();
    out.push_back(u);
    if (depth[u] == hops) continue;
    for (VertexId v : g.neighbours(u)) {
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        queue.push(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double forced_path_length(const TDGraph& g, VertexId s, VertexId first, VertexId t) {
  if (!g.adjacent(s, first)) {
    throw PreconditionError("forced_path_length: first hop is not a neighbour of s");
  }
  return distance(g.position(s), g.position(first)) + shortest_paths(g, first)[t];
}

}  // namespace tdroute
