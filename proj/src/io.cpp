#include "tdroute/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tdroute::io {

namespace {

using nlohmann::json;

constexpr std::string_view kFormatName = "tdroute-graph";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view token, int line) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError("not a finite decimal number: '" + std::string(token) + "'", line);
  }
  return value;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <class T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("graph file: missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph file: bad field '") + name + "': " + e.what());
  }
}

}  // namespace

std::vector<Point> parse_points(std::string_view text) {
  std::vector<Point> points;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::string_view x_tok;
    std::string_view y_tok;
    if (const auto comma = line.find(','); comma != std::string_view::npos) {
      x_tok = trim(line.substr(0, comma));
      y_tok = trim(line.substr(comma + 1));
    } else {
      const auto gap = line.find_first_of(" \t");
      if (gap == std::string_view::npos) throw ParseError("expected two coordinates", line_no);
      x_tok = line.substr(0, gap);
      y_tok = trim(line.substr(gap));
    }
    if (x_tok.empty() || y_tok.empty()) throw ParseError("expected two coordinates", line_no);
    points.push_back({parse_double(x_tok, line_no), parse_double(y_tok, line_no)});
  }
  return points;
}

std::string serialize_points(const std::vector<Point>& points) {
  std::string out;
  for (const Point& p : points) {
    out += shortest(p.x);
    out += ' ';
    out += shortest(p.y);
    out += '\n';
  }
  return out;
}

GraphDocument to_document(const TDGraph& g, Metadata metadata) {
  GraphDocument doc;
  doc.theta1 = g.shape().theta(1);
  doc.theta2 = g.shape().theta(2);
  doc.points = g.points().points;
  doc.edges = g.directed_edges();
  doc.metadata = std::move(metadata);
  return doc;
}

TDGraph to_graph(const GraphDocument& doc) {
  const TriangleShape shape = canonical_triangle(doc.theta1, doc.theta2);
  PointSet pts = require_general_position(shape, make_point_set(doc.points));
  std::vector<TDGraph::ConeSlots> slots(pts.size());
  for (const ConeEdge& e : doc.edges) {
    if (e.from >= pts.size() || e.cone < 1 || e.cone > 3) {
      throw ParseError("graph file: cone edge (" + std::to_string(e.from) + ", " +
                       std::to_string(e.cone) + ", " + std::to_string(e.to) + ") out of range");
    }
    auto& slot = slots[e.from][e.cone - 1];
    if (slot) throw ParseError("graph file: duplicate cone edge for vertex " + std::to_string(e.from));
    slot = e.to;
  }
  return TDGraph(shape, std::move(pts), std::move(slots));
}

std::string serialize_graph(const GraphDocument& doc) {
  json j;
  j["format"] = kFormatName;
  j["version"] = kGraphFormatVersion;
  j["theta1"] = doc.theta1;
  j["theta2"] = doc.theta2;
  json pts = json::array();
  for (const Point& p : doc.points) pts.push_back({p.x, p.y});
  j["points"] = std::move(pts);
  json edges = json::array();
  for (const ConeEdge& e : doc.edges) edges.push_back({e.from, e.cone, e.to});
  j["cone_edges"] = std::move(edges);

  json meta = json::object();
  const Metadata& m = doc.metadata;
  if (m.generator) meta["generator"] = *m.generator;
  if (m.seed) meta["seed"] = *m.seed;
  if (m.eps) meta["eps"] = *m.eps;
  if (m.k) meta["k"] = *m.k;
  if (m.start) meta["start"] = *m.start;
  if (m.target) meta["target"] = *m.target;
  if (!meta.empty()) j["metadata"] = std::move(meta);
  return j.dump(1) + "\n";
}

GraphDocument parse_graph(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("graph file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("graph file: top level must be an object");
  if (field<std::string>(j, "format") != kFormatName) {
    throw ParseError("graph file: unknown format tag");
  }
  const int version = field<int>(j, "version");
  if (version != kGraphFormatVersion) {
    throw ParseError("graph file: version " + std::to_string(version) + " is not supported (expected " +
                     std::to_string(kGraphFormatVersion) + ")");
  }

  GraphDocument doc;
  doc.theta1 = field<double>(j, "theta1");
  doc.theta2 = field<double>(j, "theta2");
  for (const auto& p : field<std::vector<std::array<double, 2>>>(j, "points")) {
    doc.points.push_back({p[0], p[1]});
  }
  for (const auto& e : field<std::vector<std::array<long long, 3>>>(j, "cone_edges")) {
    if (e[0] < 0 || e[2] < 0) throw ParseError("graph file: negative vertex id");
    doc.edges.push_back({static_cast<VertexId>(e[0]), static_cast<int>(e[1]),
                         static_cast<VertexId>(e[2])});
  }
  if (j.contains("metadata")) {
    const json& meta = j.at("metadata");
    Metadata& m = doc.metadata;
    try {
      if (meta.contains("generator")) m.generator = meta.at("generator").get<std::string>();
      if (meta.contains("seed")) m.seed = meta.at("seed").get<std::uint64_t>();
      if (meta.contains("eps")) m.eps = meta.at("eps").get<double>();
      if (meta.contains("k")) m.k = meta.at("k").get<int>();
      if (meta.contains("start")) m.start = meta.at("start").get<std::size_t>();
      if (meta.contains("target")) m.target = meta.at("target").get<std::size_t>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("graph file: bad metadata: ") + e.what());
    }
  }
  return doc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
}

}  // namespace tdroute::io
