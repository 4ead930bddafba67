#include "straightedge/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace straightedge {

namespace {

constexpr double kCanvas = 760.0;
constexpr double kMargin = 30.0;
constexpr double kLegendWidth = 70.0;
constexpr const char* kAnchorColor = "#a020f0";  // purple

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Mapper {
  Coord lo, hi;
  double scale;

  explicit Mapper(const SpatialGraph& g) {
    lo = hi = g.vertex_count() > 0 ? g.coord(0) : Coord(0, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      lo = lo.cwiseMin(g.coord(v));
      hi = hi.cwiseMax(g.coord(v));
    }
    const double span = std::max({(hi - lo).x(), (hi - lo).y(), 1e-12});
    scale = kCanvas / span;
  }

  double x(const Coord& c) const { return kMargin + (c.x() - lo.x()) * scale; }
  // SVG y grows downward; flip so the drawing matches plane coordinates.
  double y(const Coord& c) const { return kMargin + (hi.y() - c.y()) * scale; }
};

}  // namespace

std::string colormap_color(double value) {
  const double v = std::clamp(value, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(255.0 * v));
  const int b = static_cast<int>(std::lround(255.0 * (1.0 - v)));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x00%02x", r, b);
  return buf;
}

void render_svg(const SpatialGraph& g, std::span<const double> values, ValueKind kind,
                const RenderAnchor& anchor, const std::string& path) {
  const auto expected = kind == ValueKind::kPerVertex
                            ? static_cast<std::size_t>(g.vertex_count())
                            : static_cast<std::size_t>(g.edge_count());
  if (values.size() != expected)
    throw LengthMismatch("expected " + std::to_string(expected) + " values, got " +
                         std::to_string(values.size()));

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");

  const Mapper map(g);
  const double width = kCanvas + 2 * kMargin + kLegendWidth;
  const double height = kCanvas + 2 * kMargin;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height)
      << "\">\n"
      << "  <defs>\n"
      << "    <linearGradient id=\"scale\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">\n"
      << "      <stop offset=\"0\" stop-color=\"" << colormap_color(0.0) << "\"/>\n"
      << "      <stop offset=\"1\" stop-color=\"" << colormap_color(1.0) << "\"/>\n"
      << "    </linearGradient>\n"
      << "  </defs>\n";

  const VertexId* anchor_vertex = std::get_if<VertexId>(&anchor);
  const EdgeKey* anchor_edge = std::get_if<EdgeKey>(&anchor);

  for (std::int32_t i = 0; i < g.edge_count(); ++i) {
    const EdgeKey& e = g.edge(i);
    const Coord a = g.coord(e.u);
    const Coord b = g.coord(e.v);
    std::string color = "#b0b0b0";
    double stroke = 1.5;
    if (kind == ValueKind::kPerEdge) {
      color = colormap_color(values[static_cast<std::size_t>(i)]);
      stroke = 2.5;
    }
    if (anchor_edge != nullptr && e == *anchor_edge) {
      color = kAnchorColor;
      stroke = 4.0;
    }
    out << "  <line x1=\"" << fmt(map.x(a)) << "\" y1=\"" << fmt(map.y(a)) << "\" x2=\""
        << fmt(map.x(b)) << "\" y2=\"" << fmt(map.y(b)) << "\" stroke=\"" << color
        << "\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
  }

  if (kind == ValueKind::kPerVertex) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const Coord c = g.coord(v);
      const bool is_anchor = anchor_vertex != nullptr && v == *anchor_vertex;
      out << "  <circle cx=\"" << fmt(map.x(c)) << "\" cy=\"" << fmt(map.y(c)) << "\" r=\""
          << (is_anchor ? "7" : "5") << "\" fill=\""
          << (is_anchor ? kAnchorColor : colormap_color(values[static_cast<std::size_t>(v)]))
          << "\"/>\n";
    }
  } else if (anchor_vertex != nullptr) {
    const Coord c = g.coord(*anchor_vertex);
    out << "  <circle cx=\"" << fmt(map.x(c)) << "\" cy=\"" << fmt(map.y(c))
        << "\" r=\"7\" fill=\"" << kAnchorColor << "\"/>\n";
  }

  // Legend: gradient strip plus bounds of the fixed [0,1] scale.
  const double lx = kCanvas + 2 * kMargin + 10.0;
  out << "  <rect x=\"" << fmt(lx) << "\" y=\"" << fmt(kMargin) << "\" width=\"18\" height=\""
      << fmt(kCanvas) << "\" fill=\"url(#scale)\" stroke=\"#404040\"/>\n"
      << "  <text x=\"" << fmt(lx + 24.0) << "\" y=\"" << fmt(kMargin + 12.0)
      << "\" font-size=\"14\">1</text>\n"
      << "  <text x=\"" << fmt(lx + 24.0) << "\" y=\"" << fmt(kMargin + kCanvas)
      << "\" font-size=\"14\">0</text>\n";

  out << "</svg>\n";
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace straightedge
