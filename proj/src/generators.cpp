#include "straightedge/generators.hpp"

#include <cmath>
#include <random>

namespace straightedge {

namespace {

// 53-bit uniform in [0, 1); spelled out so every platform draws the same
// stream from the (fully specified) mt19937_64 engine.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Coord> uniform_square_points(std::int32_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Coord> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) {
    const double x = uniform01(rng);
    const double y = uniform01(rng);
    pts.emplace_back(x, y);
  }
  return pts;
}

}  // namespace

SpatialGraph random_planar(std::int32_t n, std::uint64_t seed) {
  if (n < 3) throw Error("random_planar needs n >= 3");
  constexpr int kMaxAttempts = 16;
  for (int attempt = 0;; ++attempt) {
    const std::uint64_t salted = seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ull;
    std::vector<Coord> pts = uniform_square_points(n, salted);
    try {
      auto edges = detail::delaunay_edges(pts);
      return build_graph(std::move(pts), edges);
    } catch (const DegenerateConfiguration&) {
      if (attempt + 1 >= kMaxAttempts) throw;
    }
  }
}

SpatialGraph spatial_erdos_renyi(std::int32_t n, double p, std::uint64_t seed) {
  if (n < 2) throw Error("spatial_erdos_renyi needs n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Coord> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) {
    const double x = uniform01(rng);
    const double y = uniform01(rng);
    pts.emplace_back(x, y);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (uniform01(rng) < p) edges.emplace_back(i, j);
  return build_graph(std::move(pts), edges);
}

SpatialGraph square_grid(std::int32_t k) {
  if (k < 2) throw Error("square_grid needs k >= 2");
  std::vector<Coord> pts;
  pts.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (std::int32_t row = 0; row < k; ++row)
    for (std::int32_t col = 0; col < k; ++col)
      pts.emplace_back(static_cast<double>(col), static_cast<double>(row));

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(2 * static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1));
  for (std::int32_t row = 0; row < k; ++row) {
    for (std::int32_t col = 0; col < k; ++col) {
      const VertexId id = row * k + col;
      if (col + 1 < k) edges.emplace_back(id, id + 1);
      if (row + 1 < k) edges.emplace_back(id, id + k);
    }
  }
  return build_graph(std::move(pts), edges);
}

SpatialGraph radio_concentric(std::int32_t spokes, std::int32_t rings) {
  if (spokes < 3) throw Error("radio_concentric needs at least 3 spokes");
  if (rings < 1) throw Error("radio_concentric needs at least 1 ring");

  std::vector<Coord> pts;
  pts.reserve(1 + static_cast<std::size_t>(spokes) * static_cast<std::size_t>(rings));
  pts.emplace_back(0.0, 0.0);
  for (std::int32_t ring = 1; ring <= rings; ++ring) {
    for (std::int32_t j = 0; j < spokes; ++j) {
      const double angle = 2.0 * M_PI * j / spokes;
      pts.emplace_back(ring * std::cos(angle), ring * std::sin(angle));
    }
  }

  const auto id_of = [spokes](std::int32_t ring, std::int32_t j) {
    return 1 + (ring - 1) * spokes + j;
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(2 * static_cast<std::size_t>(spokes) * static_cast<std::size_t>(rings));
  for (std::int32_t j = 0; j < spokes; ++j) {
    edges.emplace_back(0, id_of(1, j));
    for (std::int32_t ring = 1; ring < rings; ++ring)
      edges.emplace_back(id_of(ring, j), id_of(ring + 1, j));
  }
  for (std::int32_t ring = 1; ring <= rings; ++ring)
    for (std::int32_t j = 0; j < spokes; ++j)
      edges.emplace_back(id_of(ring, j), id_of(ring, (j + 1) % spokes));
  return build_graph(std::move(pts), edges);
}

}  // namespace straightedge
