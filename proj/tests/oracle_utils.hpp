// Test-only oracles, deliberately independent of the library's numeric paths:
// quadrature here is adaptive Simpson (the library integrates with
// Gauss-Kronrod), and all-pairs distances come from Floyd-Warshall (the
// library uses Dijkstra).
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "straightedge/graph.hpp"

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(f, a, m, fa, flm, fm);
  const double right = simpson(f, m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw std::runtime_error("simpson oracle recursion limit");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

/// Adaptive Simpson quadrature to absolute tolerance tol.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  if (!(b > a)) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson(f, a, b, fa, fm, fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 60);
}

/// All-pairs shortest-path lengths by Floyd-Warshall.
inline std::vector<std::vector<double>> all_pairs(const straightedge::SpatialGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (std::int32_t e = 0; e < g.edge_count(); ++e) {
    const auto& k = g.edge(e);
    const double len = g.edge_length(e);
    d[static_cast<std::size_t>(k.u)][static_cast<std::size_t>(k.v)] = len;
    d[static_cast<std::size_t>(k.v)][static_cast<std::size_t>(k.u)] = len;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

/// Graph distance between two points as the explicit minimum over the four
/// vertex-routed path families (same-edge pairs take the straight segment).
inline double brute_point_distance(const straightedge::SpatialGraph& g,
                                   const std::vector<std::vector<double>>& d,
                                   const straightedge::PointRef& p1,
                                   const straightedge::PointRef& p2) {
  using straightedge::point_vertex;
  if (p1.edge == p2.edge) return std::abs(p1.ell - p2.ell);
  const auto w1 = point_vertex(g, p1);
  const auto w2 = point_vertex(g, p2);
  if (w1 && (*w1 == p2.edge.u || *w1 == p2.edge.v)) {
    const double at = *w1 == p2.edge.u ? 0.0 : g.edge_length(g.edge_index(p2.edge));
    return std::abs(at - p2.ell);
  }
  if (w2 && (*w2 == p1.edge.u || *w2 == p1.edge.v)) {
    const double at = *w2 == p1.edge.u ? 0.0 : g.edge_length(g.edge_index(p1.edge));
    return std::abs(at - p1.ell);
  }
  const double l1 = g.edge_length(g.edge_index(p1.edge));
  const double l2 = g.edge_length(g.edge_index(p2.edge));
  const auto u1 = static_cast<std::size_t>(p1.edge.u);
  const auto v1 = static_cast<std::size_t>(p1.edge.v);
  const auto u2 = static_cast<std::size_t>(p2.edge.u);
  const auto v2 = static_cast<std::size_t>(p2.edge.v);
  const double best = std::min(
      std::min(p1.ell + d[u1][u2] + p2.ell, p1.ell + d[u1][v2] + l2 - p2.ell),
      std::min(l1 - p1.ell + d[v1][u2] + p2.ell, l1 - p1.ell + d[v1][v2] + l2 - p2.ell));
  return best;
}

/// Uniform random point on a uniformly chosen edge.
inline straightedge::PointRef random_point(const straightedge::SpatialGraph& g,
                                           std::mt19937_64& rng) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  const auto idx = static_cast<std::int32_t>(rng() % m);
  const double frac = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return straightedge::PointRef{g.edge(idx), frac * g.edge_length(idx)};
}

/// Similarity transform: rotate by angle, scale, then translate.
inline straightedge::SpatialGraph transformed(const straightedge::SpatialGraph& g, double angle,
                                              double scale, const straightedge::Coord& shift) {
  std::vector<straightedge::Coord> coords;
  coords.reserve(static_cast<std::size_t>(g.vertex_count()));
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  for (straightedge::VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& p = g.coord(v);
    coords.emplace_back(scale * (c * p.x() - s * p.y()) + shift.x(),
                        scale * (s * p.x() + c * p.y()) + shift.y());
  }
  std::vector<std::pair<straightedge::VertexId, straightedge::VertexId>> pairs;
  pairs.reserve(static_cast<std::size_t>(g.edge_count()));
  for (std::int32_t i = 0; i < g.edge_count(); ++i)
    pairs.emplace_back(g.edge(i).u, g.edge(i).v);
  return straightedge::build_graph(std::move(coords), pairs);
}

// Shared fixtures.

/// (0,0)-(1,0)-(1,1): two unit edges meeting at a right angle.
inline straightedge::SpatialGraph l_graph() {
  return straightedge::build_graph({{0, 0}, {1, 0}, {1, 1}}, {{0, 1}, {1, 2}});
}

/// Unit square cycle v0..v3 counterclockwise from the origin.
inline straightedge::SpatialGraph square_cycle() {
  return straightedge::build_graph({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                   {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

/// Collinear path on the x axis with the given x positions.
inline straightedge::SpatialGraph path_graph(const std::vector<double>& xs) {
  std::vector<straightedge::Coord> coords;
  std::vector<std::pair<straightedge::VertexId, straightedge::VertexId>> pairs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    coords.emplace_back(xs[i], 0.0);
    if (i > 0)
      pairs.emplace_back(static_cast<straightedge::VertexId>(i - 1),
                         static_cast<straightedge::VertexId>(i));
  }
  return straightedge::build_graph(std::move(coords), pairs);
}

/// Two disjoint unit edges on parallel lines.
inline straightedge::SpatialGraph two_disconnected_edges() {
  return straightedge::build_graph({{0, 0}, {1, 0}, {0, 2}, {1, 2}}, {{0, 1}, {2, 3}});
}

}  // namespace oracle
