#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle_utils.hpp"
#include "straightedge/continuous.hpp"
#include "straightedge/discretize.hpp"
#include "straightedge/generators.hpp"
#include "straightedge/parallel.hpp"

using namespace straightedge;

namespace {

// Petersen graph embedding: n = 10, m = 15.
SpatialGraph petersen() {
  std::vector<Coord> coords;
  for (int i = 0; i < 5; ++i) {
    const double a = 2.0 * M_PI * i / 5.0 + M_PI / 2.0;
    coords.emplace_back(2.0 * std::cos(a), 2.0 * std::sin(a));
  }
  for (int i = 0; i < 5; ++i) {
    const double a = 2.0 * M_PI * i / 5.0 + M_PI / 2.0;
    coords.emplace_back(std::cos(a), std::sin(a));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);            // outer cycle
    edges.emplace_back(i, i + 5);                  // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);    // inner pentagram
  }
  return build_graph(std::move(coords), edges);
}

}  // namespace

TEST_CASE("segment counts follow the refinement formulas") {
  SUBCASE("single edge split in four") {
    const auto g = oracle::path_graph({0.0, 1.0});
    const auto sg = segment_graph(g, 4);
    CHECK(sg.graph.vertex_count() == 5);
    CHECK(sg.graph.edge_count() == 4);
    for (std::int32_t i = 0; i < 4; ++i)
      CHECK(sg.graph.edge_length(i) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(sg.epsilon == doctest::Approx(0.25));
  }
  SUBCASE("n=10 m=15 theta=4") {
    const auto g = petersen();
    REQUIRE(g.vertex_count() == 10);
    REQUIRE(g.edge_count() == 15);
    const auto sg = segment_graph(g, 4);
    CHECK(sg.graph.vertex_count() == 10 + 3 * 15);  // 55
    CHECK(sg.graph.edge_count() == 4 * 15);         // 60
  }
}

TEST_CASE("theta = 1 reproduces the input graph") {
  const auto g = oracle::square_cycle();
  const auto sg = segment_graph(g, 1);
  CHECK(sg.graph.vertex_count() == g.vertex_count());
  CHECK(sg.graph.edge_count() == g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(sg.graph.coord(v) == g.coord(v));
  for (std::int32_t i = 0; i < g.edge_count(); ++i) CHECK(sg.graph.edge(i) == g.edge(i));
  CHECK(sg.original_vertex_map[2] == 2);
}

TEST_CASE("inserted vertices are degree-2 and collinear") {
  const auto g = oracle::l_graph();
  const auto sg = segment_graph(g, 5);
  for (VertexId v = g.vertex_count(); v < sg.graph.vertex_count(); ++v) {
    CHECK(sg.graph.neighbors(v).size() == 2);
  }
  // every refined edge of the first original edge stays on the x axis
  for (std::int32_t i = 0; i < sg.graph.edge_count(); ++i) {
    const EdgeKey& e = sg.graph.edge(i);
    const Coord a = sg.graph.coord(e.u);
    const Coord b = sg.graph.coord(e.v);
    const bool on_x = std::abs(a.y()) < 1e-12 && std::abs(b.y()) < 1e-12;
    const bool on_vertical = std::abs(a.x() - 1.0) < 1e-12 && std::abs(b.x() - 1.0) < 1e-12;
    CHECK((on_x || on_vertical));
  }
}

TEST_CASE("segmentation preserves total edge length and original coordinates") {
  const auto g = random_planar(20, 5);
  const auto sg = segment_graph(g, 7);
  CHECK(sg.graph.total_edge_length() ==
        doctest::Approx(g.total_edge_length()).epsilon(1e-9));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    CHECK(sg.graph.coord(sg.original_vertex_map[static_cast<std::size_t>(v)]) == g.coord(v));
}

TEST_CASE("sigma of a vertex") {
  SUBCASE("unit square cycle") {
    const auto g = oracle::square_cycle();
    const auto dp = make_provider(g, DistanceMode::kOnDemand);
    CHECK(sigma_vertex(g, 0, dp) == doctest::Approx(0.90236892706218251).epsilon(1e-12));
  }
  SUBCASE("collinear path") {
    const auto g = oracle::path_graph({0.0, 0.4, 1.9, 2.2});
    const auto dp = make_provider(g, DistanceMode::kOnDemand);
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      CHECK(sigma_vertex(g, u, dp) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("isolated vertex sees only disconnected pairs") {
    const auto g = build_graph({{0, 0}, {1, 0}, {5, 5}}, {{0, 1}});
    const auto dp = make_provider(g, DistanceMode::kOnDemand);
    CHECK(sigma_vertex(g, 2, dp) == 0.0);
  }
}

TEST_CASE("sigma_theta for a vertex") {
  const auto g = oracle::square_cycle();
  const auto dp = make_provider(g, DistanceMode::kOnDemand);
  CHECK(sigma_theta_vertex(g, 0, 1) == sigma_vertex(g, 0, dp));
  CHECK(sigma_theta_vertex(g, 0, 0) == sigma_vertex(g, 0, dp));  // theta=0 alias

  SUBCASE("collinear path stays exact for any theta") {
    const auto path = oracle::path_graph({0.0, 0.8, 1.7});
    for (const std::int32_t theta : {1, 3, 17})
      CHECK(sigma_theta_vertex(path, 1, theta) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("L-graph approaches the continuous vertex average") {
    const auto l = oracle::l_graph();
    const auto dpl = make_provider(l, DistanceMode::kOnDemand);
    const double reference = avg_straightness_point_graph(l, dpl, vertex_point(l, 0));
    CHECK(std::abs(sigma_theta_vertex(l, 0, 200) - reference) < 5e-3);
  }
}

TEST_CASE("sigma_theta for the whole graph") {
  SUBCASE("single edge") {
    const auto g = oracle::path_graph({0.0, 1.0});
    for (const std::int32_t theta : {1, 2, 9})
      CHECK(sigma_theta_graph(g, theta) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("two disconnected unit edges at theta=1") {
    const auto g = oracle::two_disconnected_edges();
    CHECK(sigma_theta_graph(g, 1) == doctest::Approx(2.0 / 6.0).epsilon(1e-12));
  }
  SUBCASE("values stay in the unit interval") {
    const auto g = random_planar(15, 77);
    for (const std::int32_t theta : {1, 4, 9}) {
      const double v = sigma_theta_graph(g, theta);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("whole-graph discrete average converges to the continuous one") {
  const auto g = random_planar(25, 4321);
  const auto dp = make_provider(g, DistanceMode::kOnDemand);
  const double reference = avg_straightness_graph(g, dp, true);
  const double coarse = sigma_theta_graph(g, 10);
  const double fine = sigma_theta_graph(g, 200);
  CHECK(std::abs(fine - reference) < std::abs(coarse - reference));
  CHECK(std::abs(fine - reference) < 5e-3);
}

TEST_CASE("precomputed budget errors propagate through sigma_theta") {
  const auto g = random_planar(30, 8);
  // theta=50 yields a few thousand refined vertices; 1 KiB cannot hold the table
  CHECK_THROWS_AS(sigma_theta_graph(g, 50, DistanceMode::kPrecomputed, 1024), BudgetExceeded);
}

TEST_CASE("sigma_graph is schedule-independent") {
  const auto g = random_planar(40, 9);
  const auto dp = make_provider(g, DistanceMode::kOnDemand);
  set_thread_cap(1);
  const double serial = sigma_graph(g, dp);
  set_thread_cap(4);
  const double parallel = sigma_graph(g, dp);
  set_thread_cap(0);
  CHECK(serial == parallel);
}
