#include "straightedge/bench.hpp"

#include <sys/resource.h>

namespace straightedge {

std::uint64_t peak_memory_bytes() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  // ru_maxrss is in kilobytes on Linux
  return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024u;
}

SweepResult bench_convergence(const SpatialGraph& g, std::optional<VertexId> u,
                              const std::vector<std::int32_t>& thetas,
                              const QuadratureConfig& qc, DistanceMode mode,
                              std::size_t memory_budget_bytes) {
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (thetas[i] < 0) throw Error("theta must be non-negative");
    if (i > 0 && thetas[i] <= thetas[i - 1]) throw Error("theta values must be strictly increasing");
  }

  SweepResult result;
  result.thetas = thetas;

  {
    const WallTimer timer;
    const DistanceProvider dp = make_provider(g, mode, memory_budget_bytes);
    result.continuous_reference =
        u.has_value() ? avg_straightness_point_graph(g, dp, vertex_point(g, *u), qc)
                      : avg_straightness_graph(g, dp, true, qc);
    result.reference_time_s = timer.seconds();
    result.reference_peak_mem_bytes = peak_memory_bytes();
  }

  for (const std::int32_t theta : thetas) {
    const WallTimer timer;
    double sigma = 0.0;
    std::int64_t n_prime = g.vertex_count();
    std::int64_t m_prime = g.edge_count();
    if (theta <= 1) {
      const DistanceProvider dp = make_provider(g, mode, memory_budget_bytes);
      sigma = u.has_value() ? sigma_vertex(g, u.value(), dp) : sigma_graph(g, dp);
    } else {
      const SegmentedGraph sg = segment_graph(g, theta);
      n_prime = sg.graph.vertex_count();
      m_prime = sg.graph.edge_count();
      const DistanceProvider dp = make_provider(sg.graph, mode, memory_budget_bytes);
      sigma = u.has_value()
                  ? sigma_vertex(sg.graph, sg.original_vertex_map[static_cast<std::size_t>(*u)], dp)
                  : sigma_graph(sg.graph, dp);
    }
    result.sigma_values.push_back(sigma);
    result.time_s.push_back(timer.seconds());
    result.peak_mem_bytes.push_back(peak_memory_bytes());
    result.n_prime.push_back(n_prime);
    result.m_prime.push_back(m_prime);
  }
  return result;
}

}  // namespace straightedge
