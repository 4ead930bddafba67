#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_utils.hpp"
#include "straightedge/generators.hpp"
#include "straightedge/graph.hpp"

using namespace straightedge;

TEST_CASE("single edge construction") {
  const auto g = build_graph({{0, 0}, {1, 0}}, {{0, 1}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge_length(0) == doctest::Approx(1.0));
}

TEST_CASE("edge endpoints are canonicalized") {
  const auto g = build_graph({{0, 0}, {1, 0}}, {{1, 0}});
  CHECK(g.edge(0) == EdgeKey{0, 1});
}

TEST_CASE("construction rejections") {
  CHECK_THROWS_AS(build_graph({{0, 0}, {0, 0}}, {{0, 1}}), ZeroLengthEdge);
  CHECK_THROWS_AS(build_graph({{0, 0}, {1, 0}}, {{0, 0}}), SelfLoop);
  CHECK_THROWS_AS(build_graph({{0, 0}, {1, 0}}, {{0, 1}, {1, 0}}), DuplicateEdge);
  CHECK_THROWS_AS(build_graph({{0, 0}, {1, 0}}, {{0, 2}}), IndexOutOfRange);
}

TEST_CASE("coincident vertices are allowed when unconnected to each other") {
  const auto g = build_graph({{0, 0}, {0, 0}, {1, 0}}, {{0, 2}, {1, 2}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("edges are stored in lexicographic order") {
  const auto g = build_graph({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {{2, 3}, {0, 3}, {0, 1}});
  CHECK(g.edge(0) == EdgeKey{0, 1});
  CHECK(g.edge(1) == EdgeKey{0, 3});
  CHECK(g.edge(2) == EdgeKey{2, 3});
}

TEST_CASE("point_coords interpolates along the edge") {
  const auto g = build_graph({{0, 0}, {2, 0}}, {{0, 1}});
  const Coord mid = point_coords(g, {EdgeKey{0, 1}, 0.5});
  CHECK(mid.x() == doctest::Approx(0.5));
  CHECK(mid.y() == doctest::Approx(0.0));

  const Coord at_u = point_coords(g, {EdgeKey{0, 1}, 0.0});
  CHECK(at_u == g.coord(0));

  const auto diag = build_graph({{0, 0}, {1, 1}}, {{0, 1}});
  const Coord half = point_coords(diag, {EdgeKey{0, 1}, std::sqrt(2.0) / 2.0});
  CHECK(half.x() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(half.y() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("point validation") {
  const auto g = build_graph({{0, 0}, {1, 0}}, {{0, 1}});
  CHECK_THROWS_AS(point_coords(g, {EdgeKey{0, 1}, 1.5}), InvalidPointRef);
  CHECK_THROWS_AS(point_coords(g, {EdgeKey{0, 1}, -0.1}), InvalidPointRef);
}

TEST_CASE("euclidean_distance basics") {
  CHECK(euclidean_distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
  CHECK(euclidean_distance({1, 1}, {1, 1}) == 0.0);
  CHECK(euclidean_distance({0, 0}, {1, 1}) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("euclidean_between_points on shared and distinct edges") {
  const auto g = build_graph({{0, 0}, {1, 0}}, {{0, 1}});
  CHECK(euclidean_between_points(g, {EdgeKey{0, 1}, 0.2}, {EdgeKey{0, 1}, 0.7}) ==
        doctest::Approx(0.5).epsilon(1e-13));

  const auto l = oracle::l_graph();
  // shared end-vertex reached from both edges
  CHECK(euclidean_between_points(l, {EdgeKey{0, 1}, 1.0}, {EdgeKey{1, 2}, 0.0}) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(euclidean_between_points(l, {EdgeKey{0, 1}, 0.5}, {EdgeKey{1, 2}, 0.5}) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
}

TEST_CASE("relative form agrees with the coordinate form") {
  const auto g = random_planar(40, 99);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const PointRef p1 = oracle::random_point(g, rng);
    const PointRef p2 = oracle::random_point(g, rng);
    const double rel = euclidean_between_points(g, p1, p2);
    const double abs = euclidean_distance(point_coords(g, p1), point_coords(g, p2));
    CHECK(rel == doctest::Approx(abs).epsilon(1e-12));
  }
}

TEST_CASE("point_coords is affine in ell") {
  const auto g = random_planar(20, 3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto idx = static_cast<std::int32_t>(rng() % static_cast<std::size_t>(g.edge_count()));
    const EdgeKey e = g.edge(idx);
    const double len = g.edge_length(idx);
    const double a = static_cast<double>(rng() >> 11) * 0x1.0p-53 * len;
    const double b = static_cast<double>(rng() >> 11) * 0x1.0p-53 * len;
    const Coord mid = point_coords(g, {e, 0.5 * (a + b)});
    const Coord avg = 0.5 * (point_coords(g, {e, a}) + point_coords(g, {e, b}));
    CHECK((mid - avg).norm() <= 1e-12);
  }
}

TEST_CASE("stored edge lengths match endpoint distances") {
  const auto g = random_planar(60, 17);
  for (std::int32_t i = 0; i < g.edge_count(); ++i) {
    const EdgeKey& e = g.edge(i);
    CHECK(g.edge_length(i) ==
          doctest::Approx(euclidean_distance(g.coord(e.u), g.coord(e.v))).epsilon(1e-12));
  }
}

TEST_CASE("swapped arguments give the same distance") {
  const auto g = random_planar(25, 7);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const PointRef p1 = oracle::random_point(g, rng);
    const PointRef p2 = oracle::random_point(g, rng);
    CHECK(euclidean_between_points(g, p1, p2) == euclidean_between_points(g, p2, p1));
  }
}

TEST_CASE("triangle inequality over sampled points") {
  const auto g = random_planar(25, 8);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const PointRef a = oracle::random_point(g, rng);
    const PointRef b = oracle::random_point(g, rng);
    const PointRef c = oracle::random_point(g, rng);
    CHECK(euclidean_between_points(g, a, c) <=
          euclidean_between_points(g, a, b) + euclidean_between_points(g, b, c) + 1e-12);
  }
}

TEST_CASE("vertex_point round-trips through point_vertex") {
  const auto g = oracle::square_cycle();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const PointRef p = vertex_point(g, v);
    REQUIRE(point_vertex(g, p).has_value());
    CHECK(*point_vertex(g, p) == v);
  }
  const auto isolated = build_graph({{0, 0}, {1, 0}, {5, 5}}, {{0, 1}});
  CHECK_THROWS_AS(vertex_point(isolated, 2), InvalidPointRef);
}
