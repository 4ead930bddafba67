#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "straightedge/continuous.hpp"
#include "straightedge/discretize.hpp"
#include "straightedge/report.hpp"

namespace straightedge {

/// Process-level peak resident memory in bytes (high-water mark).
std::uint64_t peak_memory_bytes();

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Runs the discrete approximation for each theta (strictly increasing;
/// 0 means "original graph") plus the continuous reference: S_G(u) when u is
/// given, S_G(G) otherwise. Measured computations run serially, recording
/// wall time, peak memory and the refined graph sizes per run.
SweepResult bench_convergence(const SpatialGraph& g, std::optional<VertexId> u,
                              const std::vector<std::int32_t>& thetas,
                              const QuadratureConfig& qc = {},
                              DistanceMode mode = DistanceMode::kOnDemand,
                              std::size_t memory_budget_bytes = kDefaultDistanceBudget);

}  // namespace straightedge
