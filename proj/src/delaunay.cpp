#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "straightedge/generators.hpp"

namespace straightedge::detail {

namespace {

struct Triangle {
  std::int32_t a, b, c;  // counterclockwise
};

double orient2d(const Coord& pa, const Coord& pb, const Coord& pc) {
  return (pb.x() - pa.x()) * (pc.y() - pa.y()) - (pb.y() - pa.y()) * (pc.x() - pa.x());
}

// > 0 when pd lies inside the circumcircle of the ccw triangle (pa, pb, pc).
double incircle(const Coord& pa, const Coord& pb, const Coord& pc, const Coord& pd) {
  const double adx = pa.x() - pd.x(), ady = pa.y() - pd.y();
  const double bdx = pb.x() - pd.x(), bdy = pb.y() - pd.y();
  const double cdx = pc.x() - pd.x(), cdy = pc.y() - pd.y();
  const double ad = adx * adx + ady * ady;
  const double bd = bdx * bdx + bdy * bdy;
  const double cd = cdx * cdx + cdy * cdy;
  return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
         ad * (bdx * cdy - bdy * cdx);
}

struct EdgeHash {
  std::size_t operator()(const std::pair<std::int32_t, std::int32_t>& e) const {
    return std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.first)) << 32) |
        static_cast<std::uint32_t>(e.second));
  }
};

}  // namespace

std::vector<std::pair<VertexId, VertexId>> delaunay_edges(const std::vector<Coord>& points) {
  const auto n = static_cast<std::int32_t>(points.size());
  if (n < 3) throw DegenerateConfiguration("triangulation needs at least 3 points");

  for (std::int32_t i = 0; i < n; ++i)
    for (std::int32_t j = i + 1; j < n; ++j)
      if (points[static_cast<std::size_t>(i)] == points[static_cast<std::size_t>(j)])
        throw DegenerateConfiguration("coincident points");

  Coord lo = points[0], hi = points[0];
  for (const Coord& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const Coord center = 0.5 * (lo + hi);
  const double span = std::max({(hi - lo).x(), (hi - lo).y(), 1.0});

  std::vector<Coord> pts = points;
  const auto s0 = n, s1 = n + 1, s2 = n + 2;
  pts.push_back(center + Coord(-30.0 * span, -20.0 * span));
  pts.push_back(center + Coord(30.0 * span, -20.0 * span));
  pts.push_back(center + Coord(0.0, 40.0 * span));

  std::vector<Triangle> tris;
  tris.push_back(Triangle{s0, s1, s2});

  std::vector<std::size_t> bad;
  std::vector<std::pair<std::int32_t, std::int32_t>> boundary;
  for (std::int32_t i = 0; i < n; ++i) {
    const Coord& p = pts[static_cast<std::size_t>(i)];
    bad.clear();
    for (std::size_t t = 0; t < tris.size(); ++t) {
      const Triangle& tr = tris[t];
      if (incircle(pts[static_cast<std::size_t>(tr.a)], pts[static_cast<std::size_t>(tr.b)],
                   pts[static_cast<std::size_t>(tr.c)], p) > 0.0)
        bad.push_back(t);
    }
    if (bad.empty()) throw DegenerateConfiguration("point outside every circumcircle");

    // Boundary of the star-shaped hole: directed edges of bad triangles whose
    // reverse is not another bad-triangle edge.
    boundary.clear();
    std::unordered_set<std::pair<std::int32_t, std::int32_t>, EdgeHash> all_edges;
    for (const std::size_t t : bad) {
      const Triangle& tr = tris[t];
      all_edges.insert({tr.a, tr.b});
      all_edges.insert({tr.b, tr.c});
      all_edges.insert({tr.c, tr.a});
    }
    for (const auto& e : all_edges)
      if (!all_edges.count({e.second, e.first})) boundary.push_back(e);

    for (auto it = bad.rbegin(); it != bad.rend(); ++it) {
      tris[*it] = tris.back();
      tris.pop_back();
    }
    for (const auto& [ea, eb] : boundary) {
      Triangle t{ea, eb, i};
      const double orient = orient2d(pts[static_cast<std::size_t>(t.a)],
                                     pts[static_cast<std::size_t>(t.b)],
                                     pts[static_cast<std::size_t>(t.c)]);
      if (orient == 0.0) throw DegenerateConfiguration("collinear triangle");
      if (orient < 0.0) std::swap(t.b, t.c);
      tris.push_back(t);
    }
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Triangle& tr : tris) {
    if (tr.a >= n || tr.b >= n || tr.c >= n) continue;  // touches the super-triangle
    edges.emplace_back(std::min(tr.a, tr.b), std::max(tr.a, tr.b));
    edges.emplace_back(std::min(tr.b, tr.c), std::max(tr.b, tr.c));
    edges.emplace_back(std::min(tr.a, tr.c), std::max(tr.a, tr.c));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.empty()) throw DegenerateConfiguration("collinear point set");
  return edges;
}

}  // namespace straightedge::detail
