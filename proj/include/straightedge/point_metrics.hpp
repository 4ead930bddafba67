#pragma once

#include "straightedge/distances.hpp"
#include "straightedge/graph.hpp"

namespace straightedge {

/// Break-even position on a target edge: the offset from the smaller
/// end-vertex at which routing through either end gives equal path length.
struct BreakEven {
  double lambda = 0.0;   // clamped to [0, target edge length]
  int case_index = 0;    // 1..4 for the point variant, 0 for the vertex variant
  double raw_lambda = 0.0;  // pre-clamp value, kept for diagnostics
};

/// Break-even distance of `target` for vertex r:
/// (d_G(r, v) - d_G(r, u) + d_E(u, v)) / 2.
/// Precondition: r is not an interior point of target (r may be u or v).
/// Throws Disconnected when r cannot reach the target's component.
BreakEven break_even_vertex(const SpatialGraph& g, const DistanceProvider& dp, VertexId r,
                            const EdgeKey& target);

/// d_G between vertex r and point p: d_G(r,u) + ell while ell <= lambda_r,
/// d_G(r,v) + d_E(u,v) - ell past it. Returns +infinity when disconnected.
double graph_distance_vertex_point(const SpatialGraph& g, const DistanceProvider& dp, VertexId r,
                                   const PointRef& p);

/// Break-even distance of `target` for an arbitrary point p1, with the
/// 4-case selection driven by comparing p1's offset against the break-even
/// distances of p1's host edge for the target's end-vertices.
/// Throws SameEdge when p1's host edge is the target, Disconnected when the
/// edges lie in different components.
BreakEven break_even_point(const SpatialGraph& g, const DistanceProvider& dp, const PointRef& p1,
                           const EdgeKey& target);

/// d_G between two points. Same-edge pairs (including a shared end-vertex
/// that is itself p1 or p2) reduce to the Euclidean distance; the general
/// case is the 4-case piecewise route expression. +infinity when
/// disconnected.
double graph_distance_points(const SpatialGraph& g, const DistanceProvider& dp,
                             const PointRef& p1, const PointRef& p2);

/// Straightness between two points: 0 when disconnected, 1 on a shared edge,
/// d_E / d_G otherwise. Always in [0, 1].
double straightness_points(const SpatialGraph& g, const DistanceProvider& dp, const PointRef& p1,
                           const PointRef& p2);

namespace detail {

/// True when the pair reduces to the straight same-edge case: equal host
/// edges, or a common end-vertex that coincides with p1 or p2.
bool same_edge_pair(const SpatialGraph& g, const PointRef& p1, const PointRef& p2);

}  // namespace detail

}  // namespace straightedge
