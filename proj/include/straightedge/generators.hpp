#pragma once

#include <cstdint>

#include "straightedge/graph.hpp"

namespace straightedge {

/// n points drawn uniformly in the unit square, connected by their Delaunay
/// triangulation. Deterministic per (n, seed): coordinates come from
/// mt19937_64 mapped to [0,1) via (x >> 11) * 2^-53, consumed as x then y per
/// vertex in index order. Degenerate draws (coincident or fully collinear
/// point sets) are redrawn internally from a perturbed seed.
SpatialGraph random_planar(std::int32_t n, std::uint64_t seed);

/// n uniform points in the unit square; every unordered pair becomes an edge
/// independently with probability p, pairs visited in lexicographic order.
SpatialGraph spatial_erdos_renyi(std::int32_t n, double p, std::uint64_t seed);

/// k-by-k unit-spaced lattice with the 2k(k-1) axis-aligned edges.
SpatialGraph square_grid(std::int32_t k);

/// One center vertex, rings*spokes perimeter vertices at radii 1..rings,
/// radial edges along each spoke and straight chords closing each ring:
/// 1 + rings*spokes vertices, 2*rings*spokes edges.
SpatialGraph radio_concentric(std::int32_t spokes, std::int32_t rings);

namespace detail {

/// Delaunay triangulation edge set (Bowyer-Watson). Throws
/// DegenerateConfiguration on coincident points or an all-collinear input.
std::vector<std::pair<VertexId, VertexId>> delaunay_edges(const std::vector<Coord>& points);

}  // namespace detail

}  // namespace straightedge
