#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdroute/geometry.hpp"
#include "tdroute/graph.hpp"

namespace tdroute::io {

// Points file: one point per line as "x y" or "x,y"; '#' starts a comment;
// blank lines are skipped.
std::vector<Point> parse_points(std::string_view text);
std::string serialize_points(const std::vector<Point>& points);

inline constexpr int kGraphFormatVersion = 1;

// Optional provenance carried through graph files.
struct Metadata {
  std::optional<std::string> generator;
  std::optional<std::uint64_t> seed;
  std::optional<double> eps;
  std::optional<int> k;
  std::optional<std::size_t> start;
  std::optional<std::size_t> target;

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct GraphDocument {
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::vector<Point> points;
  std::vector<ConeEdge> edges;
  Metadata metadata;
};

GraphDocument to_document(const TDGraph& g, Metadata metadata = {});
// Rebuilds the graph; the stored point set is re-validated.
TDGraph to_graph(const GraphDocument& doc);

// JSON document with fields format, version, theta1, theta2, points
// ([[x, y], ...]), cone_edges ([[u, i, v], ...]) and optional metadata.
// Doubles are written in shortest round-trip form.
std::string serialize_graph(const GraphDocument& doc);
GraphDocument parse_graph(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace tdroute::io
