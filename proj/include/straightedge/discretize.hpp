#pragma once

#include <cstdint>
#include <vector>

#include "straightedge/distances.hpp"
#include "straightedge/graph.hpp"

namespace straightedge {

/// A graph refined by splitting every edge into equal-length segments, with
/// the mapping from original vertices to their ids in the refined graph.
struct SegmentedGraph {
  SpatialGraph graph;
  std::vector<VertexId> original_vertex_map;  // original id -> refined id
  double theta = 1.0;    // segments per original edge
  double epsilon = 0.0;  // longest segment actually produced
};

/// Splits every edge of g into exactly theta equal parts, inserting all new
/// vertices and edges in one bulk construction. theta == 1 returns a copy
/// identical to g. For integer theta the refined graph has n + (theta-1)*m
/// vertices and theta*m edges.
SegmentedGraph segment_graph(const SpatialGraph& g, std::int32_t theta);

/// Classic vertex-to-vertex average Straightness of u: the mean of
/// d_E(u,v)/d_G(u,v) over all v != u, disconnected pairs contributing 0.
double sigma_vertex(const SpatialGraph& g, VertexId u, const DistanceProvider& dp);

/// Classic whole-graph average: the mean of S over all unordered distinct
/// vertex pairs of g. Parallelizes over sources with a fixed reduction order.
double sigma_graph(const SpatialGraph& g, const DistanceProvider& dp);

/// Discrete approximation of the point-to-graph average: sigma_vertex
/// evaluated on segment_graph(g, theta), averaging over every refined vertex.
/// theta <= 1 (0 is an alias for "no segmentation") uses g itself.
double sigma_theta_vertex(const SpatialGraph& g, VertexId u, std::int32_t theta,
                          DistanceMode mode = DistanceMode::kOnDemand,
                          std::size_t memory_budget_bytes = kDefaultDistanceBudget);

/// Discrete approximation of the whole-graph average: the mean of S over all
/// unordered distinct vertex pairs of the refined graph. theta <= 1 uses g.
/// BudgetExceeded propagates when a precomputed table does not fit.
double sigma_theta_graph(const SpatialGraph& g, std::int32_t theta,
                         DistanceMode mode = DistanceMode::kOnDemand,
                         std::size_t memory_budget_bytes = kDefaultDistanceBudget);

}  // namespace straightedge
