#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <memory>

#include "straightedge/graph.hpp"

namespace straightedge {

/// Exact shortest-path lengths from s under Euclidean edge weights.
/// Unreachable vertices map to +infinity. The relaxation order is fully
/// deterministic (priority ties broken by vertex index), so repeated runs
/// produce bitwise-identical rows.
Eigen::VectorXd single_source_distances(const SpatialGraph& g, VertexId s);

enum class DistanceMode { kOnDemand, kPrecomputed };

struct ProviderStats {
  std::uint64_t rows_computed = 0;
  std::uint64_t row_requests = 0;
};

/// Vertex-to-vertex graph-distance source.
///
/// kPrecomputed materializes all n rows up front (n*n*8 bytes must fit the
/// memory budget). kOnDemand keeps an LRU cache of whole source rows within
/// the budget. Both modes answer any query from the row of the smaller
/// endpoint, so distance(a, b) == distance(b, a) exactly and the two modes
/// agree bitwise on every query.
///
/// Concurrency: queries may be issued from any number of threads. A distinct
/// source row is computed at most once per cache residency and readers only
/// ever observe complete rows.
class DistanceProvider {
 public:
  DistanceMode mode() const;
  const SpatialGraph& graph() const;

  /// d_G(a, b); +infinity when disconnected, 0 when a == b.
  double distance(VertexId a, VertexId b) const;

  /// All distances from s. The returned row stays valid after eviction.
  std::shared_ptr<const Eigen::VectorXd> source_row(VertexId s) const;

  ProviderStats stats() const;

 private:
  friend DistanceProvider make_provider(const SpatialGraph& g, DistanceMode mode,
                                        std::size_t memory_budget_bytes);
  struct Impl;
  explicit DistanceProvider(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

inline constexpr std::size_t kDefaultDistanceBudget = std::size_t{2} << 30;  // 2 GiB

/// Throws BudgetExceeded when a kPrecomputed table would not fit the budget;
/// callers may fall back to kOnDemand.
DistanceProvider make_provider(const SpatialGraph& g, DistanceMode mode,
                               std::size_t memory_budget_bytes = kDefaultDistanceBudget);

}  // namespace straightedge
