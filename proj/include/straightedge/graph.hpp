#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "straightedge/errors.hpp"

namespace straightedge {

/// Planar position, in abstract length units.
using Coord = Eigen::Vector2d;

/// Dense vertex index, 0 <= id < vertex_count().
using VertexId = std::int32_t;

/// Undirected edge in canonical form: end-vertices stored with u < v.
struct EdgeKey {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// Canonicalizes an unordered vertex pair.
inline EdgeKey make_edge_key(VertexId a, VertexId b) {
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

/// A point anywhere on the graph, addressed as (host edge, arc-length offset
/// from the canonically smaller end-vertex). ell == 0 denotes vertex u,
/// ell == edge length denotes vertex v.
struct PointRef {
  EdgeKey edge;
  double ell = 0.0;
};

struct AdjacencyEntry {
  VertexId neighbor;
  std::int32_t edge_index;
  double length;
};

/// Immutable spatial graph: 2-D vertex coordinates, canonically ordered
/// straight-segment edges weighted by their Euclidean length, and a
/// precomputed adjacency structure. Safe for unrestricted concurrent reads.
class SpatialGraph {
 public:
  SpatialGraph() = default;

  std::int32_t vertex_count() const { return static_cast<std::int32_t>(coords_.size()); }
  std::int32_t edge_count() const { return static_cast<std::int32_t>(edges_.size()); }

  const Coord& coord(VertexId v) const { return coords_[static_cast<std::size_t>(v)]; }
  const std::vector<Coord>& coords() const { return coords_; }

  const EdgeKey& edge(std::int32_t i) const { return edges_[static_cast<std::size_t>(i)]; }
  const std::vector<EdgeKey>& edges() const { return edges_; }

  double edge_length(std::int32_t i) const { return lengths_[static_cast<std::size_t>(i)]; }
  double edge_length(const EdgeKey& e) const;

  /// Incident edges of v, in ascending neighbor order.
  std::span<const AdjacencyEntry> neighbors(VertexId v) const {
    const auto b = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v) + 1]);
    return {adj_.data() + b, e - b};
  }

  std::optional<std::int32_t> find_edge(VertexId a, VertexId b) const;
  std::int32_t edge_index(const EdgeKey& e) const;

  double total_edge_length() const { return total_length_; }

  bool valid_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }

 private:
  friend SpatialGraph build_graph(std::vector<Coord> vertex_coords,
                                  const std::vector<std::pair<VertexId, VertexId>>& edge_pairs);

  std::vector<Coord> coords_;
  std::vector<EdgeKey> edges_;   // sorted lexicographically
  std::vector<double> lengths_;  // lengths_[i] = |coord(v) - coord(u)| of edges_[i]
  std::vector<std::int32_t> adj_offsets_;
  std::vector<AdjacencyEntry> adj_;
  std::unordered_map<std::uint64_t, std::int32_t> edge_lookup_;
  double total_length_ = 0.0;
};

/// Builds a SpatialGraph from coordinates and (unordered) endpoint pairs.
/// Edges are canonicalized and stored in lexicographic order; endpoint order
/// in the input is irrelevant.
///
/// Throws IndexOutOfRange, SelfLoop, DuplicateEdge, ZeroLengthEdge.
/// Coincident vertices are allowed; zero-length edges are not.
SpatialGraph build_graph(std::vector<Coord> vertex_coords,
                         const std::vector<std::pair<VertexId, VertexId>>& edge_pairs);

double euclidean_distance(const Coord& a, const Coord& b);

/// Absolute coordinates of a point, by the section formula.
Coord point_coords(const SpatialGraph& g, const PointRef& p);

/// Euclidean distance between two graph points, evaluated in relative terms
/// (end-vertex coordinates and the two arc-length offsets only).
double euclidean_between_points(const SpatialGraph& g, const PointRef& p1, const PointRef& p2);

/// The vertex a PointRef denotes, when its offset is exactly 0 or the edge
/// length; nullopt for interior points.
std::optional<VertexId> point_vertex(const SpatialGraph& g, const PointRef& p);

/// Represents vertex v as a point on its lowest-index incident edge.
/// Throws InvalidPointRef for isolated vertices. Downstream measures are
/// invariant under the choice of incident edge.
PointRef vertex_point(const SpatialGraph& g, VertexId v);

/// Throws InvalidPointRef unless p addresses a valid point of g.
void validate_point(const SpatialGraph& g, const PointRef& p);

}  // namespace straightedge
