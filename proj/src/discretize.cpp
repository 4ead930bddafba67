#include "straightedge/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "straightedge/detail/numeric.hpp"
#include "straightedge/parallel.hpp"

namespace straightedge {

SegmentedGraph segment_graph(const SpatialGraph& g, std::int32_t theta) {
  if (theta < 1) throw Error("segmentation factor must be at least 1");
  const auto n = g.vertex_count();
  const auto m = g.edge_count();

  std::vector<Coord> coords = g.coords();
  coords.reserve(static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(theta - 1) * static_cast<std::size_t>(m));
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(static_cast<std::size_t>(theta) * static_cast<std::size_t>(m));

  double epsilon = 0.0;
  for (std::int32_t i = 0; i < m; ++i) {
    const EdgeKey& e = g.edge(i);
    epsilon = std::max(epsilon, g.edge_length(i) / theta);
    const Coord cu = g.coord(e.u);
    const Coord cv = g.coord(e.v);
    VertexId prev = e.u;
    for (std::int32_t k = 1; k < theta; ++k) {
      const auto id = static_cast<VertexId>(coords.size());
      const double frac = static_cast<double>(k) / theta;
      coords.push_back(cu + frac * (cv - cu));
      pairs.emplace_back(prev, id);
      prev = id;
    }
    pairs.emplace_back(prev, e.v);
  }

  SegmentedGraph out;
  out.graph = build_graph(std::move(coords), pairs);
  out.original_vertex_map.resize(static_cast<std::size_t>(n));
  std::iota(out.original_vertex_map.begin(), out.original_vertex_map.end(), 0);
  out.theta = theta;
  out.epsilon = epsilon;
  return out;
}

namespace {

// Mean straightness contribution of all pairs (s, v) with v > s, computed
// from the row of s; disconnected pairs contribute 0.
double row_pair_sum(const SpatialGraph& g, const Eigen::VectorXd& row, VertexId s) {
  detail::NeumaierSum acc;
  for (VertexId v = s + 1; v < g.vertex_count(); ++v) {
    const double dg = row[v];
    if (!std::isfinite(dg) || dg <= 0.0) continue;
    acc.add(std::min(euclidean_distance(g.coord(s), g.coord(v)) / dg, 1.0));
  }
  return acc.value();
}

}  // namespace

double sigma_vertex(const SpatialGraph& g, VertexId u, const DistanceProvider& dp) {
  if (!g.valid_vertex(u)) throw IndexOutOfRange("vertex index out of range");
  const auto n = g.vertex_count();
  if (n <= 1) return 0.0;
  const auto row = dp.source_row(u);
  detail::NeumaierSum acc;
  for (VertexId v = 0; v < n; ++v) {
    if (v == u) continue;
    const double dg = (*row)[v];
    if (!std::isfinite(dg) || dg <= 0.0) continue;
    acc.add(std::min(euclidean_distance(g.coord(u), g.coord(v)) / dg, 1.0));
  }
  return acc.value() / (n - 1);
}

double sigma_theta_vertex(const SpatialGraph& g, VertexId u, std::int32_t theta,
                          DistanceMode mode, std::size_t memory_budget_bytes) {
  if (!g.valid_vertex(u)) throw IndexOutOfRange("vertex index out of range");
  if (theta <= 1) {
    const DistanceProvider dp = make_provider(g, mode, memory_budget_bytes);
    return sigma_vertex(g, u, dp);
  }
  const SegmentedGraph sg = segment_graph(g, theta);
  const DistanceProvider dp = make_provider(sg.graph, mode, memory_budget_bytes);
  return sigma_vertex(sg.graph, sg.original_vertex_map[static_cast<std::size_t>(u)], dp);
}

double sigma_graph(const SpatialGraph& g, const DistanceProvider& dp) {
  const auto n = g.vertex_count();
  if (n <= 1) return 0.0;

  std::vector<double> partial(static_cast<std::size_t>(n), 0.0);
  parallel_for(0, n, [&](std::int64_t s) {
    const auto row = dp.source_row(static_cast<VertexId>(s));
    partial[static_cast<std::size_t>(s)] = row_pair_sum(g, *row, static_cast<VertexId>(s));
  });

  detail::NeumaierSum acc;
  for (VertexId s = 0; s < n; ++s) acc.add(partial[static_cast<std::size_t>(s)]);
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  return acc.value() / pairs;
}

double sigma_theta_graph(const SpatialGraph& g, std::int32_t theta, DistanceMode mode,
                         std::size_t memory_budget_bytes) {
  if (theta <= 1) {
    const DistanceProvider dp = make_provider(g, mode, memory_budget_bytes);
    return sigma_graph(g, dp);
  }
  const SegmentedGraph sg = segment_graph(g, theta);
  const DistanceProvider dp = make_provider(sg.graph, mode, memory_budget_bytes);
  return sigma_graph(sg.graph, dp);
}

}  // namespace straightedge
