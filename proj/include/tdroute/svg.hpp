#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tdroute/graph.hpp"
#include "tdroute/routing.hpp"

namespace tdroute::svg {

struct Options {
  // Route drawn over the graph.
  std::optional<RouteTrace> route;
  // Vertex whose six cone rays are drawn.
  std::optional<VertexId> cones;
  // Shade the three negative cones of `cones`.
  bool shade_negative_cones = false;
  // Pair whose smallest homothet is drawn.
  std::optional<std::pair<VertexId, VertexId>> homothet;
  int size = 800;
  int margin = 40;
};

// Deterministic SVG of the graph, fitted to the instance bounding box.
std::string render(const TDGraph& g, const Options& options = {});

}  // namespace tdroute::svg
