#include "tdroute/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace tdroute::svg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // Avoid "-0.000".
  if (std::string_view(buf) == "-0.000") return "0.000";
  return buf;
}

class Canvas {
 public:
  Canvas(const TDGraph& g, const Options& o) : size_(o.size), margin_(o.margin) {
    const auto& pts = g.points().points;
    if (!pts.empty()) {
      lo_ = hi_ = pts.front();
      for (const Point& p : pts) {
        lo_.x = std::min(lo_.x, p.x);
        lo_.y = std::min(lo_.y, p.y);
        hi_.x = std::max(hi_.x, p.x);
        hi_.y = std::max(hi_.y, p.y);
      }
    }
    const double extent = std::max(hi_.x - lo_.x, hi_.y - lo_.y);
    scale_ = extent > 0.0 ? (size_ - 2.0 * margin_) / extent : 1.0;
    extent_ = extent > 0.0 ? extent : 1.0;
  }

  double x(Point p) const { return margin_ + (p.x - lo_.x) * scale_; }
  double y(Point p) const { return size_ - margin_ - (p.y - lo_.y) * scale_; }
  double extent() const { return extent_; }
  int size() const { return size_; }

  std::string at(Point p) const { return num(x(p)) + "," + num(y(p)); }

 private:
  int size_;
  int margin_;
  Point lo_;
  Point hi_;
  double scale_ = 1.0;
  double extent_ = 1.0;
};

void line(std::ostringstream& os, const Canvas& c, Point a, Point b, const char* style) {
  os << "  <line x1=\"" << num(c.x(a)) << "\" y1=\"" << num(c.y(a)) << "\" x2=\"" << num(c.x(b))
     << "\" y2=\"" << num(c.y(b)) << "\" " << style << "/>\n";
}

}  // namespace

std::string render(const TDGraph& g, const Options& options) {
  const Canvas c(g, options);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.size() << "\" height=\""
     << c.size() << "\" viewBox=\"0 0 " << c.size() << " " << c.size() << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (options.homothet) {
    const auto [u, v] = *options.homothet;
    const Homothet h = smallest_homothet(g.shape(), g.position(u), g.position(v));
    os << "  <polygon points=\"" << c.at(h.corners[0]) << " " << c.at(h.corners[1]) << " "
       << c.at(h.corners[2]) << "\" fill=\"#fde68a\" fill-opacity=\"0.5\" stroke=\"#b45309\"/>\n";
  }

  if (options.cones) {
    const Point apex = g.position(*options.cones);
    const double reach = 0.35 * c.extent();
    for (int i = 1; i <= 3; ++i) {
      const auto& rays = g.shape().cone_rays(i);
      if (options.shade_negative_cones) {
        const Point a = apex + (-reach) * rays[0];
        const Point b = apex + (-reach) * rays[1];
        os << "  <polygon points=\"" << c.at(apex) << " " << c.at(a) << " " << c.at(b)
           << "\" fill=\"#c7d2fe\" fill-opacity=\"0.4\" stroke=\"none\"/>\n";
      }
      for (const Point& r : rays) {
        line(os, c, apex, apex + reach * r, "stroke=\"#4f46e5\" stroke-width=\"1\"");
        line(os, c, apex, apex + (-reach) * r,
             "stroke=\"#4f46e5\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
      }
    }
  }

  for (const auto& [u, v] : g.undirected_edges()) {
    line(os, c, g.position(u), g.position(v), "stroke=\"#6b7280\" stroke-width=\"1.2\"");
  }

  if (options.route && options.route->vertices.size() > 1) {
    os << "  <polyline points=\"";
    bool first = true;
    for (VertexId v : options.route->vertices) {
      os << (first ? "" : " ") << c.at(g.position(v));
      first = false;
    }
    os << "\" fill=\"none\" stroke=\"#dc2626\" stroke-width=\"3\"/>\n";
  }

  for (VertexId v = 0; v < g.size(); ++v) {
    const Point p = g.position(v);
    os << "  <circle cx=\"" << num(c.x(p)) << "\" cy=\"" << num(c.y(p))
       << "\" r=\"3\" fill=\"#111827\"/>\n";
    os << "  <text x=\"" << num(c.x(p) + 4.0) << "\" y=\"" << num(c.y(p) - 4.0)
       << "\" font-size=\"10\" fill=\"#374151\">" << v << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tdroute::svg
