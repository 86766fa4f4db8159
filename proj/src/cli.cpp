#include "tdroute/cli.hpp"

#include <iomanip>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "tdroute/analysis.hpp"
#include "tdroute/io.hpp"
#include "tdroute/svg.hpp"

namespace tdroute::cli {

namespace {

struct Args {
  std::string points_file;
  std::string graph_file;
  std::string out_file;
  std::string svg_file;
  double theta1 = 0.0;
  double theta2 = 0.0;
  bool oracle = false;
  std::optional<std::pair<std::uint64_t, double>> perturb;
  std::size_t from = 0;
  std::size_t to = 0;
  bool baseline = false;
  bool no_verify = false;
  std::string kind;
  int k = 3;
  std::optional<double> eps;
  std::optional<double> alpha;
  int variant = 1;
  std::uint64_t seed = kAdversarialSeed;
  std::vector<std::size_t> route_pair;
  std::optional<std::size_t> cones;
  bool shade = false;
  std::vector<std::size_t> homothet_pair;
};

TDGraph load_graph(const std::string& path) {
  return io::to_graph(io::parse_graph(io::read_file(path)));
}

void check_vertex(const TDGraph& g, std::size_t v, const char* what) {
  if (v >= g.size()) {
    throw PreconditionError(std::string(what) + " vertex " + std::to_string(v) +
                            " is out of range (graph has " + std::to_string(g.size()) +
                            " vertices)");
  }
}

void print_witness(std::ostream& out, const RatioReport& r) {
  if (r.witness) out << " (witness " << r.witness->first << " -> " << r.witness->second << ")";
  out << "\n";
}

int cmd_build(const Args& a, std::ostream& out) {
  const TriangleShape shape = canonical_triangle(a.theta1, a.theta2);
  PointSet pts = make_point_set(io::parse_points(io::read_file(a.points_file)));
  io::Metadata meta;
  meta.generator = "build";
  if (a.perturb) {
    pts = perturb(shape, pts, a.perturb->first, a.perturb->second);
    meta.seed = a.perturb->first;
    meta.eps = a.perturb->second;
  } else {
    pts = require_general_position(shape, std::move(pts));
  }
  const TDGraph g = build_sweep(shape, pts);
  if (a.oracle) {
    const TDGraph o = build_empty_homothet_oracle(shape, pts);
    if (!o.same_edges(g)) {
      throw ConstructionError("oracle construction disagrees with the sweep construction");
    }
    out << "oracle: edge sets agree\n";
  }
  io::write_file(a.out_file, io::serialize_graph(io::to_document(g, meta)));
  out << "vertices " << g.size() << ", edges " << g.undirected_edges().size() << " -> "
      << a.out_file << "\n";
  return kExitOk;
}

int cmd_route(const Args& a, std::ostream& out) {
  const TDGraph g = load_graph(a.graph_file);
  check_vertex(g, a.from, "--from");
  check_vertex(g, a.to, "--to");
  const RouteTrace trace =
      a.baseline ? affine_baseline_route(g, a.from, a.to) : route(g, a.from, a.to, !a.no_verify);

  out << (a.baseline ? "router: affine baseline (midpoint thresholds)\n"
                     : "router: optimal thresholds\n");
  out << std::setw(5) << "step" << std::setw(8) << "from" << std::setw(8) << "to" << std::setw(6)
      << "case" << std::setw(4) << "j" << std::setw(20) << "potential" << std::setw(20)
      << "length" << "\n";
  out << std::setprecision(12);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const RouteStep& s = trace.steps[i];
    out << std::setw(5) << i << std::setw(8) << s.from << std::setw(8) << s.to << std::setw(6)
        << label(s.kind) << std::setw(4) << s.j << std::setw(20) << s.potential << std::setw(20)
        << s.length << "\n";
  }
  const double direct = distance(g.position(a.from), g.position(a.to));
  out << "path:";
  for (VertexId v : trace.vertices) out << " " << v;
  out << "\n";
  out << "length " << trace.total_length << "\n";
  if (direct > 0.0) out << "ratio " << trace.total_length / direct << "\n";

  if (!a.svg_file.empty()) {
    svg::Options opt;
    opt.route = trace;
    io::write_file(a.svg_file, svg::render(g, opt));
  }
  return kExitOk;
}

int cmd_span(const Args& a, std::ostream& out) {
  const TDGraph g = load_graph(a.graph_file);
  const RatioReport r = spanning_ratio(g);
  out << std::setprecision(12);
  out << "spanning ratio " << r.ratio;
  print_witness(out, r);
  out << "bound 1/sin(theta1/2) " << spanning_bound(g.shape().theta(1)) << "\n";
  return kExitOk;
}

int cmd_rratio(const Args& a, std::ostream& out) {
  const TDGraph g = load_graph(a.graph_file);
  const RatioReport r =
      routing_ratio_measured(g, a.baseline ? Router::affine_baseline : Router::optimal);
  const BoundValue c = c_theta(g.shape().theta(1), g.shape().theta(2));
  out << std::setprecision(12);
  out << "routing ratio " << r.ratio;
  print_witness(out, r);
  out << "negative-cone pairs " << r.negative_ratio << " (bound C " << c.value << ")\n";
  out << "positive-cone pairs " << r.positive_ratio << " (bound 1/sin(theta1/2) "
      << spanning_bound(g.shape().theta(1)) << ")\n";
  return kExitOk;
}

int cmd_ctheta(const Args& a, std::ostream& out) {
  const BoundValue c = c_theta(a.theta1, a.theta2);
  out << std::fixed << std::setprecision(10);
  out << "C(theta1, theta2) " << c.value << "\n";
  out << "argmax j " << c.j << " alpha " << c.alpha << "\n";
  out << "1/sin(theta1/2) " << spanning_bound(a.theta1) << "\n";
  return kExitOk;
}

int cmd_adversarial(const Args& a, std::ostream& out) {
  const TriangleShape shape = canonical_triangle(a.theta1, a.theta2);
  io::Metadata meta;
  if (a.kind == "span") {
    const double eps = a.eps.value_or(1e-4);
    const SpanningInstance inst = adversarial_spanning(shape, eps, a.seed);
    const TDGraph g = build_sweep(shape, inst.points);
    meta.generator = "adversarial-span";
    meta.seed = a.seed;
    meta.eps = eps;
    meta.start = inst.a;
    meta.target = inst.b;
    io::write_file(a.out_file, io::serialize_graph(io::to_document(g, meta)));
    out << "a " << inst.a << ", b " << inst.b << ", tau1 " << inst.tau1 << " -> " << a.out_file
        << "\n";
    return kExitOk;
  }
  const double eps = a.eps.value_or(kDefaultEps);
  const RoutingInstance inst = adversarial_routing(shape, a.k, eps, a.alpha);
  const TDGraph g = build_sweep(shape, a.variant == 1 ? inst.first : inst.second);
  meta.generator = a.variant == 1 ? "adversarial-route-1" : "adversarial-route-2";
  meta.eps = eps;
  meta.k = a.k;
  meta.start = inst.start;
  meta.target = inst.target;
  io::write_file(a.out_file, io::serialize_graph(io::to_document(g, meta)));
  out << std::setprecision(12);
  out << "graph " << a.variant << ": start " << inst.start << ", target " << inst.target
      << ", j " << inst.j << ", alpha " << inst.alpha << " -> " << a.out_file << "\n";
  return kExitOk;
}

int cmd_render(const Args& a, std::ostream& out) {
  const TDGraph g = load_graph(a.graph_file);
  svg::Options opt;
  if (a.route_pair.size() == 2) {
    check_vertex(g, a.route_pair[0], "--route");
    check_vertex(g, a.route_pair[1], "--route");
    opt.route = route(g, a.route_pair[0], a.route_pair[1], true);
  }
  if (a.cones) {
    check_vertex(g, *a.cones, "--cones");
    opt.cones = a.cones;
    opt.shade_negative_cones = a.shade;
  }
  if (a.homothet_pair.size() == 2) {
    check_vertex(g, a.homothet_pair[0], "--homothet");
    check_vertex(g, a.homothet_pair[1], "--homothet");
    opt.homothet = std::make_pair(a.homothet_pair[0], a.homothet_pair[1]);
  }
  io::write_file(a.svg_file, svg::render(g, opt));
  out << "wrote " << a.svg_file << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangle-distance Delaunay graphs: construction, routing and bounds", "tdroute"};
  app.require_subcommand(1);
  Args a;

  auto add_shape = [&](CLI::App* cmd) {
    cmd->add_option("--theta1", a.theta1, "Smallest angle of the triangle (radians)")->required();
    cmd->add_option("--theta2", a.theta2, "Middle angle of the triangle (radians)")->required();
  };

  auto* build = app.add_subcommand("build", "Construct a graph from a points file");
  build->add_option("--points", a.points_file, "Points file")->required();
  add_shape(build);
  build->add_flag("--oracle", a.oracle, "Also run the empty-homothet construction and compare");
  build->add_option("--perturb", a.perturb, "SEED MAG: perturb into general position");
  build->add_option("--out", a.out_file, "Output graph file")->required();

  auto* rt = app.add_subcommand("route", "Route between two vertices");
  rt->add_option("--graph", a.graph_file, "Graph file")->required();
  rt->add_option("--from", a.from, "Start vertex")->required();
  rt->add_option("--to", a.to, "Target vertex")->required();
  rt->add_flag("--baseline", a.baseline, "Use midpoint thresholds");
  rt->add_flag("--no-verify", a.no_verify, "Skip the potential check");
  rt->add_option("--svg", a.svg_file, "Render the route");

  auto* span = app.add_subcommand("span", "Spanning ratio of a graph");
  span->add_option("--graph", a.graph_file, "Graph file")->required();

  auto* rratio = app.add_subcommand("rratio", "Measured routing ratio over all ordered pairs");
  rratio->add_option("--graph", a.graph_file, "Graph file")->required();
  rratio->add_flag("--baseline", a.baseline, "Use midpoint thresholds");

  auto* ctheta = app.add_subcommand("ctheta", "Routing and spanning bounds for a triangle");
  add_shape(ctheta);

  auto* adv = app.add_subcommand("adversarial", "Emit a lower-bound instance as a graph file");
  adv->add_option("kind", a.kind, "span or route")
      ->required()
      ->check(CLI::IsMember({"span", "route"}));
  add_shape(adv);
  adv->add_option("--k", a.k, "Neighbourhood depth (route)")->check(CLI::PositiveNumber);
  adv->add_option("--eps", a.eps, "Placement slack");
  adv->add_option("--alpha", a.alpha, "Angle at the target corner (route)");
  adv->add_option("--variant", a.variant, "Which of the two graphs to write (route)")
      ->check(CLI::IsMember({1, 2}));
  adv->add_option("--seed", a.seed, "Perturbation seed (span)");
  adv->add_option("--out", a.out_file, "Output graph file")->required();

  auto* render = app.add_subcommand("render", "Render a graph as SVG");
  render->add_option("--graph", a.graph_file, "Graph file")->required();
  render->add_option("--svg", a.svg_file, "Output SVG file")->required();
  render->add_option("--route", a.route_pair, "I J: overlay the route from I to J")
      ->expected(2);
  render->add_option("--cones", a.cones, "Draw the cone rays at vertex V");
  render->add_flag("--shade-negative", a.shade, "Shade the negative cones of --cones");
  render->add_option("--homothet", a.homothet_pair, "I J: draw the smallest homothet")
      ->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*build) return cmd_build(a, out);
    if (*rt) return cmd_route(a, out);
    if (*span) return cmd_span(a, out);
    if (*rratio) return cmd_rratio(a, out);
    if (*ctheta) return cmd_ctheta(a, out);
    if (*adv) return cmd_adversarial(a, out);
    if (*render) return cmd_render(a, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace tdroute::cli
