#include "straightedge/graph.hpp"

#include <algorithm>
#include <cmath>

namespace straightedge {

namespace {

std::uint64_t pack(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
}

}  // namespace

double SpatialGraph::edge_length(const EdgeKey& e) const {
  return lengths_[static_cast<std::size_t>(edge_index(e))];
}

std::optional<std::int32_t> SpatialGraph::find_edge(VertexId a, VertexId b) const {
  if (!valid_vertex(a) || !valid_vertex(b) || a == b) return std::nullopt;
  const EdgeKey k = make_edge_key(a, b);
  const auto it = edge_lookup_.find(pack(k.u, k.v));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::int32_t SpatialGraph::edge_index(const EdgeKey& e) const {
  const auto it = edge_lookup_.find(pack(e.u, e.v));
  if (it == edge_lookup_.end()) throw InvalidPointRef("edge not present in graph");
  return it->second;
}

SpatialGraph build_graph(std::vector<Coord> vertex_coords,
                         const std::vector<std::pair<VertexId, VertexId>>& edge_pairs) {
  const auto n = static_cast<std::int32_t>(vertex_coords.size());
  for (const Coord& c : vertex_coords) {
    if (!std::isfinite(c.x()) || !std::isfinite(c.y()))
      throw Error("vertex coordinate is not finite");
  }

  std::vector<EdgeKey> edges;
  edges.reserve(edge_pairs.size());
  for (const auto& [a, b] : edge_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw IndexOutOfRange("edge endpoint index out of range");
    if (a == b) throw SelfLoop("self-loop rejected");
    edges.push_back(make_edge_key(a, b));
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1]) throw DuplicateEdge("duplicate edge rejected");
  }

  SpatialGraph g;
  g.coords_ = std::move(vertex_coords);
  g.edges_ = std::move(edges);
  g.lengths_.reserve(g.edges_.size());
  g.edge_lookup_.reserve(g.edges_.size() * 2);

  std::vector<std::int32_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const EdgeKey& e = g.edges_[i];
    const double len = euclidean_distance(g.coords_[static_cast<std::size_t>(e.u)],
                                          g.coords_[static_cast<std::size_t>(e.v)]);
    if (!(len > 0.0)) throw ZeroLengthEdge("edge with coincident endpoints rejected");
    g.lengths_.push_back(len);
    g.total_length_ += len;
    g.edge_lookup_.emplace(pack(e.u, e.v), static_cast<std::int32_t>(i));
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }

  g.adj_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::int32_t v = 0; v < n; ++v)
    g.adj_offsets_[static_cast<std::size_t>(v) + 1] =
        g.adj_offsets_[static_cast<std::size_t>(v)] + degree[static_cast<std::size_t>(v)];
  g.adj_.resize(static_cast<std::size_t>(g.adj_offsets_[static_cast<std::size_t>(n)]));

  std::vector<std::int32_t> cursor(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const EdgeKey& e = g.edges_[i];
    const double len = g.lengths_[i];
    g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.u)]++)] =
        AdjacencyEntry{e.v, static_cast<std::int32_t>(i), len};
    g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.v)]++)] =
        AdjacencyEntry{e.u, static_cast<std::int32_t>(i), len};
  }
  // Lexicographic edge order implies each vertex's list is already sorted by
  // neighbor for the u-side entries; entries gained as the v-side keep global
  // order too, but interleaving breaks per-vertex monotonicity. Sort locally
  // so traversal order is a function of the graph alone.
  for (std::int32_t v = 0; v < n; ++v) {
    auto* first = g.adj_.data() + g.adj_offsets_[static_cast<std::size_t>(v)];
    auto* last = g.adj_.data() + g.adj_offsets_[static_cast<std::size_t>(v) + 1];
    std::sort(first, last, [](const AdjacencyEntry& a, const AdjacencyEntry& b) {
      return a.neighbor < b.neighbor;
    });
  }
  return g;
}

double euclidean_distance(const Coord& a, const Coord& b) {
  return (b - a).norm();
}

void validate_point(const SpatialGraph& g, const PointRef& p) {
  const std::int32_t idx = g.edge_index(p.edge);  // throws if edge absent
  const double len = g.edge_length(idx);
  if (!(p.ell >= 0.0) || !(p.ell <= len))
    throw InvalidPointRef("point offset outside [0, edge length]");
}

Coord point_coords(const SpatialGraph& g, const PointRef& p) {
  validate_point(g, p);
  const Coord& cu = g.coord(p.edge.u);
  const Coord& cv = g.coord(p.edge.v);
  const double len = g.edge_length(g.edge_index(p.edge));
  return cu + (p.ell / len) * (cv - cu);
}

double euclidean_between_points(const SpatialGraph& g, const PointRef& p1, const PointRef& p2) {
  validate_point(g, p1);
  validate_point(g, p2);
  const Coord& u1 = g.coord(p1.edge.u);
  const Coord& v1 = g.coord(p1.edge.v);
  const Coord& u2 = g.coord(p2.edge.u);
  const Coord& v2 = g.coord(p2.edge.v);
  const double len1 = g.edge_length(g.edge_index(p1.edge));
  const double len2 = g.edge_length(g.edge_index(p2.edge));
  const Coord d = (u2 - u1) + (p2.ell / len2) * (v2 - u2) - (p1.ell / len1) * (v1 - u1);
  return d.norm();
}

std::optional<VertexId> point_vertex(const SpatialGraph& g, const PointRef& p) {
  const double len = g.edge_length(g.edge_index(p.edge));
  if (p.ell == 0.0) return p.edge.u;
  if (p.ell == len) return p.edge.v;
  return std::nullopt;
}

PointRef vertex_point(const SpatialGraph& g, VertexId v) {
  if (!g.valid_vertex(v)) throw IndexOutOfRange("vertex index out of range");
  const auto nb = g.neighbors(v);
  if (nb.empty()) throw InvalidPointRef("isolated vertex lies on no edge");
  std::int32_t best = nb[0].edge_index;
  for (const auto& e : nb) best = std::min(best, e.edge_index);
  const EdgeKey& ek = g.edge(best);
  return PointRef{ek, ek.u == v ? 0.0 : g.edge_length(best)};
}

}  // namespace straightedge
