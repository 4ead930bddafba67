#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "straightedge/quadrature.hpp"

namespace straightedge {

/// One measured metric value plus the configuration that produced it.
/// CSV schema (fixed): measure,target,value,theta,time_s,peak_mem_bytes,seed,mode
struct MetricReport {
  std::string measure;  // S_uv(p), S_G(p), S_e2(e1), S_G(e), S_G(G), sigma, sigma_theta
  std::string target;   // "v:<id>", "e:<u>-<v>", "e:<..>|e:<..>" or "graph"
  double value = 0.0;
  double theta = 0.0;  // 0 for continuous measures
  double time_s = 0.0;
  std::uint64_t peak_mem_bytes = 0;
  std::uint64_t seed = 0;
  std::string mode;  // distance strategy: "ondemand" or "precomputed"
  QuadratureConfig quadrature;  // echoed configuration, not serialized
};

/// One convergence sweep: discrete approximations over increasing theta
/// against the continuous reference.
struct SweepResult {
  std::vector<std::int32_t> thetas;  // strictly increasing
  std::vector<double> sigma_values;
  std::vector<double> time_s;
  std::vector<std::uint64_t> peak_mem_bytes;
  std::vector<std::int64_t> n_prime;
  std::vector<std::int64_t> m_prime;
  double continuous_reference = 0.0;
  double reference_time_s = 0.0;
  std::uint64_t reference_peak_mem_bytes = 0;
};

std::string csv_header();
std::string csv_row(const MetricReport& report);

/// Writes header plus one row per report (UTF-8, LF, '.' decimal separator).
void export_csv(const std::vector<MetricReport>& reports, const std::string& path);

}  // namespace straightedge
