#include "straightedge/point_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "straightedge/detail/edge_pair.hpp"

namespace straightedge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_to(double x, double hi) { return std::min(std::max(x, 0.0), hi); }

}  // namespace

BreakEven break_even_vertex(const SpatialGraph& g, const DistanceProvider& dp, VertexId r,
                            const EdgeKey& target) {
  const double len = g.edge_length(g.edge_index(target));
  const double du = dp.distance(r, target.u);
  const double dv = dp.distance(r, target.v);
  if (!std::isfinite(du) || !std::isfinite(dv))
    throw Disconnected("vertex cannot reach the target edge");
  const double raw = (dv - du + len) / 2.0;
  return BreakEven{clamp_to(raw, len), 0, raw};
}

double graph_distance_vertex_point(const SpatialGraph& g, const DistanceProvider& dp, VertexId r,
                                   const PointRef& p) {
  validate_point(g, p);
  const double len = g.edge_length(g.edge_index(p.edge));
  const double du = dp.distance(r, p.edge.u);
  const double dv = dp.distance(r, p.edge.v);
  if (!std::isfinite(du) || !std::isfinite(dv)) return kInf;
  const double lambda = clamp_to((dv - du + len) / 2.0, len);
  return p.ell <= lambda ? du + p.ell : dv + len - p.ell;
}

namespace detail {

PairDistances pair_distances(const SpatialGraph& g, const DistanceProvider& dp, const EdgeKey& e1,
                             const EdgeKey& e2) {
  PairDistances pd{};
  pd.len1 = g.edge_length(g.edge_index(e1));
  pd.len2 = g.edge_length(g.edge_index(e2));
  const auto row_u1 = dp.source_row(e1.u);
  const auto row_v1 = dp.source_row(e1.v);
  pd.d_u1u2 = (*row_u1)[e2.u];
  pd.d_u1v2 = (*row_u1)[e2.v];
  pd.d_v1u2 = (*row_v1)[e2.u];
  pd.d_v1v2 = (*row_v1)[e2.v];
  pd.connected = std::isfinite(pd.d_u1u2);
  if (pd.connected) {
    pd.lam_u2 = std::min(std::max((pd.d_v1u2 - pd.d_u1u2 + pd.len1) / 2.0, 0.0), pd.len1);
    pd.lam_v2 = std::min(std::max((pd.d_v1v2 - pd.d_u1v2 + pd.len1) / 2.0, 0.0), pd.len1);
  }
  return pd;
}

int select_case(const PairDistances& pd, double ell1) {
  const bool le_u2 = ell1 <= pd.lam_u2;
  const bool le_v2 = ell1 <= pd.lam_v2;
  if (le_u2 && le_v2) return 1;
  if (!le_v2 && le_u2) return 2;
  if (!le_u2 && le_v2) return 3;
  return 4;
}

double raw_lambda_for_case(const PairDistances& pd, double ell1, int case_index) {
  switch (case_index) {
    case 1:
      return (pd.d_u1v2 - pd.d_u1u2 + pd.len2) / 2.0;
    case 2:
      return (pd.d_v1v2 - pd.d_u1u2 + pd.len1 + pd.len2 - 2.0 * ell1) / 2.0;
    case 3:
      return (pd.d_u1v2 - pd.d_v1u2 - pd.len1 + pd.len2 + 2.0 * ell1) / 2.0;
    default:
      return (pd.d_v1v2 - pd.d_v1u2 + pd.len2) / 2.0;
  }
}

double route_length(const PairDistances& pd, int case_index, bool through_u2, double ell1,
                    double ell2) {
  if (through_u2) {
    // cases 1,2 exit through u1; cases 3,4 through v1
    if (case_index <= 2) return ell1 + pd.d_u1u2 + ell2;
    return pd.len1 - ell1 + pd.d_v1u2 + ell2;
  }
  // cases 1,3 exit through u1; cases 2,4 through v1
  if (case_index == 1 || case_index == 3) return ell1 + pd.d_u1v2 + pd.len2 - ell2;
  return pd.len1 - ell1 + pd.d_v1v2 + pd.len2 - ell2;
}

bool same_edge_pair(const SpatialGraph& g, const PointRef& p1, const PointRef& p2) {
  if (p1.edge == p2.edge) return true;
  if (const auto w1 = point_vertex(g, p1); w1 && (*w1 == p2.edge.u || *w1 == p2.edge.v))
    return true;
  if (const auto w2 = point_vertex(g, p2); w2 && (*w2 == p1.edge.u || *w2 == p1.edge.v))
    return true;
  return false;
}

}  // namespace detail

BreakEven break_even_point(const SpatialGraph& g, const DistanceProvider& dp, const PointRef& p1,
                           const EdgeKey& target) {
  validate_point(g, p1);
  if (p1.edge == target) throw SameEdge("point already lies on the target edge");
  const auto pd = detail::pair_distances(g, dp, p1.edge, target);
  if (!pd.connected) throw Disconnected("point cannot reach the target edge");
  const int case_index = detail::select_case(pd, p1.ell);
  const double raw = detail::raw_lambda_for_case(pd, p1.ell, case_index);
  return BreakEven{clamp_to(raw, pd.len2), case_index, raw};
}

double graph_distance_points(const SpatialGraph& g, const DistanceProvider& dp,
                             const PointRef& p1, const PointRef& p2) {
  validate_point(g, p1);
  validate_point(g, p2);
  if (detail::same_edge_pair(g, p1, p2)) return euclidean_between_points(g, p1, p2);

  const auto pd = detail::pair_distances(g, dp, p1.edge, p2.edge);
  if (!pd.connected) return kInf;
  const int case_index = detail::select_case(pd, p1.ell);
  const double lambda = clamp_to(detail::raw_lambda_for_case(pd, p1.ell, case_index), pd.len2);
  return detail::route_length(pd, case_index, p2.ell <= lambda, p1.ell, p2.ell);
}

double straightness_points(const SpatialGraph& g, const DistanceProvider& dp, const PointRef& p1,
                           const PointRef& p2) {
  validate_point(g, p1);
  validate_point(g, p2);
  if (detail::same_edge_pair(g, p1, p2)) return 1.0;
  const double dg = graph_distance_points(g, dp, p1, p2);
  if (!std::isfinite(dg)) return 0.0;
  const double de = euclidean_between_points(g, p1, p2);
  return std::min(de / dg, 1.0);
}

}  // namespace straightedge
