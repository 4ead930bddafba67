#pragma once

#include <Eigen/Core>

#include "straightedge/distances.hpp"
#include "straightedge/graph.hpp"
#include "straightedge/point_metrics.hpp"
#include "straightedge/quadrature.hpp"

namespace straightedge {

/// One parameterized instance of the straightness integrand
/// f(l1, l2) = |base + l2*dir2 - l1*dir1| / (alpha + beta*l1 + gamma*l2):
/// the Euclidean distance between the two points over the length of the
/// selected route, both in relative terms. beta and gamma are +-1.
struct AuxParams {
  double alpha = 0.0;
  double beta = 1.0;
  double gamma = 1.0;
  Eigen::Vector2d base = Eigen::Vector2d::Zero();  // c(u2) - c(u1)
  Eigen::Vector2d dir1 = Eigen::Vector2d::UnitX();  // unit vector along (u1,v1)
  Eigen::Vector2d dir2 = Eigen::Vector2d::UnitX();  // unit vector along (u2,v2)
};

/// Integrand value. Throws NonPositiveDenominator when the route length is
/// not positive (an internal invariant breach: case selection guarantees a
/// positive denominator on every domain actually integrated).
double aux_f(const AuxParams& params, double ell1, double ell2);

/// Antiderivative of aux_f in ell2 at fixed ell1, up to a constant. Closed
/// form of int sqrt(l2^2 + b l2 + c) / (d + gamma l2) dl2 with logarithmic
/// terms, plus a degenerate branch for collinear geometry where the quadratic
/// under the root is a perfect square. In the collinear branch the result is
/// only valid on intervals that do not straddle the point where the
/// numerator vanishes (callers split there). Throws BranchUndefined when the
/// configuration cannot be evaluated in closed form.
double antiderivative_F(const AuxParams& params, double ell1, double ell2);

/// Total Straightness between a point and an edge: the integral of the
/// point-to-point Straightness over the target edge (units: length).
/// p1 on the target -> d_E(u2,v2); disconnected -> 0.
double total_straightness_point_edge(const SpatialGraph& g, const DistanceProvider& dp,
                                     const PointRef& p1, const EdgeKey& target,
                                     const QuadratureConfig& qc = {});

/// Average Straightness between a point and an edge, in [0, 1].
double avg_straightness_point_edge(const SpatialGraph& g, const DistanceProvider& dp,
                                   const PointRef& p1, const EdgeKey& target,
                                   const QuadratureConfig& qc = {});

/// Average Straightness between a point and every point of the graph
/// (a vertex-accessibility measure), in [0, 1].
double avg_straightness_point_graph(const SpatialGraph& g, const DistanceProvider& dp,
                                    const PointRef& p1, const QuadratureConfig& qc = {});

/// Total Straightness between two edges: the double integral of the
/// point-to-point Straightness over both edges (units: length^2).
/// e1 == e2 -> d_E(u1,v1)^2 / 2; disconnected -> 0. Symmetric in (e1, e2).
double total_straightness_edge_edge(const SpatialGraph& g, const DistanceProvider& dp,
                                    const EdgeKey& e1, const EdgeKey& e2,
                                    const QuadratureConfig& qc = {});

/// Average Straightness between two edges, in [0, 1]; exactly 1 when e1 == e2.
double avg_straightness_edge_edge(const SpatialGraph& g, const DistanceProvider& dp,
                                  const EdgeKey& e1, const EdgeKey& e2,
                                  const QuadratureConfig& qc = {});

/// Average Straightness between an edge and every point of the graph
/// (an edge-accessibility measure), in [0, 1]. include_self selects whether
/// the edge's own points are part of the average.
double avg_straightness_edge_graph(const SpatialGraph& g, const DistanceProvider& dp,
                                   const EdgeKey& e1, bool include_self = true,
                                   const QuadratureConfig& qc = {});

/// Average Straightness between all pairs of points of the graph, in [0, 1].
/// include_same_edge selects whether same-edge point pairs are part of the
/// average. Edge pairs run in lexicographic order; the reduction order is
/// fixed, so results are identical single- and multi-threaded.
double avg_straightness_graph(const SpatialGraph& g, const DistanceProvider& dp,
                              bool include_same_edge = true, const QuadratureConfig& qc = {});

}  // namespace straightedge
