#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "hfspan/graph.hpp"
#include "hfspan/koch.hpp"
#include "oracles.hpp"

using namespace hfspan;

namespace {

GeoGraph unit_square_cycle() {
  GeoGraph g({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  return g;
}

GeoGraph random_graph(std::mt19937& rng, std::size_t n, double density) {
  GeoGraph g(oracle::random_points(n, static_cast<unsigned>(rng())));
  std::bernoulli_distribution keep(density);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (keep(rng) || v == u + 1) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("edge weights are Euclidean") {
    GeoGraph g({{0, 0}, {3, 4}});
    g.add_edge(0, 1);
    CHECK(g.edges()[0].weight == 5.0);
    CHECK(g.has_edge(1, 0));
    CHECK(g.neighbors(1)[0].to == 0);
  }

  TEST_CASE("invalid graphs are rejected") {
    CHECK_THROWS_AS(GeoGraph({{0, 0}, {1, 1}, {0, 0}}), std::invalid_argument);
    GeoGraph g({{0, 0}, {1, 1}});
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 2), std::out_of_range);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  }

  TEST_CASE("complete graph examples") {
    CHECK(complete_graph({{0, 0}, {1, 0}}).edge_count() == 1);
    const GeoGraph sq = complete_graph({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(sq.edge_count() == 6);
    double longest = 0.0;
    for (const Edge& e : sq.edges()) longest = std::max(longest, e.weight);
    CHECK(longest == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(complete_graph({{0, 0}, {0, 0}}), std::invalid_argument);
  }

  TEST_CASE("shortest path examples") {
    const GeoGraph k = complete_graph(oracle::random_points(6, 1));
    const auto direct = shortest_path(k, 1, 4);
    REQUIRE(direct);
    CHECK(direct->vertex_indices == std::vector<VertexId>{1, 4});
    CHECK(direct->length == doctest::Approx(dist(k.point(1), k.point(4))));

    GeoGraph line({{0, 0}, {1, 0}, {2, 0}});
    line.add_edge(0, 1);
    line.add_edge(1, 2);
    CHECK(shortest_path(line, 0, 2)->length == doctest::Approx(2.0));

    const KochGraph f1 = koch_graph(1);
    CHECK(shortest_path(f1.graph(), 0, 4)->length == doctest::Approx(4.0 / 3.0));

    GeoGraph apart({{0, 0}, {1, 0}});
    CHECK_FALSE(shortest_path(apart, 0, 1).has_value());
  }

  TEST_CASE("shortest path ties go to the smaller predecessor") {
    // Two equal routes 0-1-3 and 0-2-3.
    GeoGraph g({{0, 0}, {1, 1}, {1, -1}, {2, 0}});
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(0, 1);
    g.add_edge(1, 3);
    CHECK(shortest_path(g, 0, 3)->vertex_indices == std::vector<VertexId>{0, 1, 3});
  }

  TEST_CASE("make_path validates edges") {
    const GeoGraph sq = unit_square_cycle();
    const PathResult p = make_path(sq, {0, 1, 2});
    CHECK(p.length == doctest::Approx(2.0));
    CHECK(p.polyline.size() == 3);
    CHECK_THROWS(make_path(sq, {0, 2}));
  }

  TEST_CASE("stretch examples") {
    const GeoGraph k = complete_graph(oracle::random_points(5, 2));
    for (VertexId u = 0; u < 5; ++u) {
      for (VertexId v = u + 1; v < 5; ++v) CHECK(stretch(k, u, v) == doctest::Approx(1.0));
    }
    const KochGraph f3 = koch_graph(3);
    CHECK(stretch(f3.graph(), 0, f3.vertex_count() - 1) == doctest::Approx(64.0 / 27.0).epsilon(1e-12));
    CHECK(stretch(unit_square_cycle(), 0, 2) == doctest::Approx(std::sqrt(2.0)));
    CHECK(stretch(GeoGraph({{0, 0}, {1, 0}}), 0, 1) == std::numeric_limits<double>::infinity());
    CHECK_THROWS(stretch(k, 2, 2));
  }

  TEST_CASE("max stretch examples") {
    CHECK(max_stretch(complete_graph(oracle::random_points(7, 3))).value == doctest::Approx(1.0));
    CHECK(max_stretch(GeoGraph({{0, 0}, {1, 0}})).value == std::numeric_limits<double>::infinity());
    CHECK_THROWS(max_stretch(GeoGraph({{0, 0}})));
  }

  TEST_CASE("max stretch of Koch graphs matches Floyd-Warshall") {
    // The extreme pair is not the maximiser beyond F_0: pairs across a
    // narrow neck have larger stretch.
    for (int n = 0; n <= 4; ++n) {
      const KochGraph k = koch_graph(n);
      const StretchWitness got = max_stretch(k.graph());
      const oracle::StretchMax ref = oracle::max_stretch(k.graph());
      CHECK(got.value == doctest::Approx(ref.value).epsilon(1e-12));
      CHECK(got.u == ref.u);
      CHECK(got.v == ref.v);
      CHECK(got.value >= std::pow(4.0 / 3.0, n) - 1e-12);
    }
  }

  TEST_CASE("random graphs: Dijkstra agrees with Floyd-Warshall") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      const GeoGraph g = random_graph(rng, 25, 0.15);
      const auto fw = oracle::floyd_warshall(g);
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const ShortestPathTree t = shortest_path_tree(g, u);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          CHECK(t.distance[v] == doctest::Approx(fw[u][v]).epsilon(1e-12));
          if (u != v) CHECK(t.distance[v] >= dist(g.point(u), g.point(v)) - 1e-12);
        }
      }
      const StretchWitness got = max_stretch(g);
      const oracle::StretchMax ref = oracle::max_stretch(g);
      CHECK(got.value == doctest::Approx(ref.value).epsilon(1e-12));
    }
  }

  TEST_CASE("bounded Dijkstra reports vertices beyond the radius as unreachable") {
    GeoGraph line({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    for (VertexId v = 0; v < 3; ++v) line.add_edge(v, v + 1);
    const ShortestPathTree t = shortest_path_tree(line, 0, 1.5);
    CHECK(t.reachable(1));
    CHECK_FALSE(t.reachable(3));
    CHECK(t.path_to(3).empty());
  }

  TEST_CASE("adding an edge never increases max stretch") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
      GeoGraph g = random_graph(rng, 15, 0.1);
      const double before = max_stretch(g).value;
      std::uniform_int_distribution<VertexId> pick(0, 14);
      VertexId a = pick(rng), b = pick(rng);
      while (a == b || g.has_edge(a, b)) {
        a = pick(rng);
        b = pick(rng);
      }
      g.add_edge(a, b);
      CHECK(max_stretch(g).value <= before + 1e-12);
    }
  }

  TEST_CASE("stretch is invariant under uniform scaling") {
    std::mt19937 rng(29);
    const GeoGraph g = random_graph(rng, 20, 0.12);
    for (double scale : {0.5, 3.0}) {
      std::vector<Point> pts;
      for (const Point& p : g.points()) pts.push_back(scale * p);
      GeoGraph h(pts);
      for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
      for (VertexId u = 0; u < 20; ++u) {
        for (VertexId v = u + 1; v < 20; ++v) {
          CHECK(stretch(h, u, v) == doctest::Approx(stretch(g, u, v)).epsilon(1e-9));
        }
      }
    }
  }
}
