#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "hfspan/koch.hpp"
#include "hfspan/metrics.hpp"
#include "oracles.hpp"

using namespace hfspan;

namespace {

const double kSqrt3 = std::sqrt(3.0);

/// Second-smallest level along the path, by sorting a copy.
int brute_pair_level(const KochGraph& k, VertexId u, VertexId v) {
  std::vector<int> lv(k.levels().begin() + static_cast<std::ptrdiff_t>(u),
                      k.levels().begin() + static_cast<std::ptrdiff_t>(v) + 1);
  std::sort(lv.begin(), lv.end());
  return lv[1];
}

}  // namespace

TEST_SUITE("koch") {
  TEST_CASE("F_0 and F_1 coordinates") {
    const KochGraph f0 = koch_graph(0);
    REQUIRE(f0.vertex_count() == 2);
    CHECK(f0.graph().edge_count() == 1);
    CHECK(f0.point(1) == Point{1, 0});

    const KochGraph f1 = koch_graph(1);
    REQUIRE(f1.vertex_count() == 5);
    const std::vector<Point> expect{{0, 0}, {1.0 / 3, 0}, {0.5, kSqrt3 / 6}, {2.0 / 3, 0}, {1, 0}};
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(f1.point(i).x == doctest::Approx(expect[i].x).epsilon(1e-15));
      CHECK(f1.point(i).y == doctest::Approx(expect[i].y).epsilon(1e-15));
    }
  }

  TEST_CASE("vertex counts, edge lengths and total length") {
    for (int n = 0; n <= 6; ++n) {
      const KochGraph k = koch_graph(n);
      CHECK(k.vertex_count() == (std::size_t{1} << (2 * n)) + 1);
      const double edge = std::pow(3.0, -n);
      double total = 0.0;
      for (const Edge& e : k.graph().edges()) {
        CHECK(e.weight == doctest::Approx(edge).epsilon(1e-12));
        total += e.weight;
      }
      CHECK(total == doctest::Approx(std::pow(4.0 / 3.0, n)).epsilon(1e-12));
    }
    CHECK(koch_graph(3).vertex_count() == 65);
  }

  TEST_CASE("generation limits") {
    CHECK_THROWS_AS(koch_graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(koch_graph(9), std::invalid_argument);
    CHECK_THROWS_AS(koch_graph(4, 3), std::invalid_argument);
  }

  TEST_CASE("F_n keeps the vertices of F_{n-1} at stride 4") {
    const KochGraph a = koch_graph(3);
    const KochGraph b = koch_graph(4);
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
      CHECK(dist(a.point(v), b.point(4 * v)) <= 1e-14);
      CHECK(a.levels()[v] == b.levels()[4 * v]);
    }
    CHECK(b.stride(3) == 4);
    CHECK(b.stride(0) == 256);
  }

  TEST_CASE("vertex levels") {
    const KochGraph k = koch_graph(4);
    CHECK(vertex_level(k, 0) == 0);
    CHECK(vertex_level(k, k.vertex_count() - 1) == 0);
    CHECK(vertex_level(k, k.stride(1)) == 1);       // (1/3, 0)
    CHECK(vertex_level(k, 2 * k.stride(1)) == 1);   // apex
    CHECK(k.point(2 * k.stride(1)).y == doctest::Approx(kSqrt3 / 6));
  }

  TEST_CASE("pair level") {
    const std::vector<int> seq{1, 3, 3, 3, 2, 3, 3, 3};
    CHECK(pair_level_of_sequence(seq) == 2);
    CHECK(pair_level_of_sequence(std::vector<int>{0, 4}) == 4);
    CHECK_THROWS(pair_level_of_sequence(std::vector<int>{1}));

    const KochGraph k = koch_graph(4);
    CHECK(pair_level(k, 0, k.vertex_count() - 1) == 0);
    CHECK(pair_level(k, 0, 1) == 4);
    CHECK(pair_level(k, 5, 2) == pair_level(k, 2, 5));
    CHECK_THROWS(pair_level(k, 3, 3));
    for (VertexId u = 0; u < k.vertex_count(); u += 7) {
      for (VertexId v = u + 1; v < k.vertex_count(); v += 5) {
        CHECK(pair_level(k, u, v) == brute_pair_level(k, u, v));
      }
    }
  }

  TEST_CASE("bound formulas") {
    const KochPairBounds two = koch_bounds_for_level(2);
    CHECK(two.hausdorff_upper == doctest::Approx(kSqrt3 / 3));
    CHECK(two.distance_lower == doctest::Approx(kSqrt3 / 18));
    const KochPairBounds zero = koch_bounds_for_level(0);
    CHECK(zero.hausdorff_upper == doctest::Approx(3 * kSqrt3));
    CHECK(zero.distance_lower == doctest::Approx(kSqrt3 / 2));
    for (int i = 0; i <= 8; ++i) {
      const KochPairBounds b = koch_bounds_for_level(i);
      CHECK(b.hausdorff_upper / b.distance_lower == doctest::Approx(6.0).epsilon(1e-12));
    }
  }

  TEST_CASE("turn classification and rectangles") {
    const KochGraph f1 = koch_graph(1);
    const Point v1 = f1.point(1), v2 = f1.point(2), v3 = f1.point(3);
    CHECK(classify_turn(v1, v2, v3) == TurnCase::sixty);
    const BoundingRect apex = bounding_rectangle(v1, v2, v3, 1, 1);
    CHECK(dist(apex.corners[0], apex.corners[1]) == doctest::Approx(1.0 / 3));
    CHECK(dist(apex.corners[1], apex.corners[2]) == doctest::Approx(kSqrt3 / 6));
    for (VertexId w = 1; w <= 3; ++w) CHECK(apex.contains(f1.point(w), 1e-12));

    CHECK(classify_turn(f1.point(0), f1.point(1), f1.point(2)) == TurnCase::two_forty);
    const BoundingRect side = bounding_rectangle(f1.point(0), f1.point(1), f1.point(2), 0, 1);
    CHECK(side.diagonal() <= kSqrt3 / 3 + 1e-12);
    CHECK(side.contains(f1.point(1), 1e-12));
    // Long side starts at the lower-level end and runs along its edge.
    CHECK(side.corners[0] == f1.point(0));
    CHECK(dist(side.corners[0], side.corners[1]) == doctest::Approx(0.5));

    CHECK_THROWS(classify_turn({0, 0}, {1, 0}, {2, 0}));
    CHECK_THROWS(classify_turn({0, 0}, {1, 0}, {1, 2}));
  }

  TEST_CASE("observations 2 and 3 hold exhaustively") {
    for (int n = 0; n <= 6; ++n) {
      const KochGraph k = koch_graph(n);
      CHECK(edges_missing_top_level(k).empty());
      CHECK(three_between_violations(k).empty());
    }
  }

  TEST_CASE("bounding rectangles contain their subpaths") {
    const KochGraph k = koch_graph(6);
    const RectangleCheck c = check_bounding_rectangles(k, 4);
    // Triples of F_1..F_4: 3 + 15 + 63 + 255.
    CHECK(c.triples == 336);
    CHECK(c.containment_violations == 0);
    CHECK(c.shape_violations == 0);
    CHECK(c.max_diagonal_ratio <= 1.0 + 1e-9);
    // Triples whose ends share a level do occur (e.g. both ends older than
    // the middle vertex's generation); the rule still yields a valid box.
    CHECK(c.equal_level_triples > 0);
  }

  TEST_CASE("level-bound sweep agrees with a brute-force sweep") {
    for (int n = 1; n <= 4; ++n) {
      const KochGraph k = koch_graph(n);
      const KochLemmaReport r = koch_lemma_sweep(k);
      double max_ratio = 0.0;
      std::size_t pairs = 0;
      bool within = true;
      for (VertexId u = 0; u < k.vertex_count(); ++u) {
        for (VertexId v = u + 1; v < k.vertex_count(); ++v) {
          ++pairs;
          const std::vector<Point> path(k.graph().points().begin() + static_cast<std::ptrdiff_t>(u),
                                        k.graph().points().begin() + static_cast<std::ptrdiff_t>(v) + 1);
          const Segment uv{k.point(u), k.point(v)};
          double dh = 0.0;
          for (const Point& p : path) dh = std::max(dh, oracle::point_segment(p, uv.a, uv.b));
          const KochPairBounds b = koch_bounds_for_level(brute_pair_level(k, u, v));
          within = within && dh <= b.hausdorff_upper + 1e-9 && uv.length() >= b.distance_lower - 1e-9;
          max_ratio = std::max(max_ratio, dh / uv.length());
        }
      }
      CHECK(r.pairs_checked == pairs);
      CHECK(r.passed() == within);
      CHECK(r.max_hausdorff_ratio == doctest::Approx(max_ratio).epsilon(1e-9));
    }
  }

  TEST_CASE("level bounds hold for n up to 6") {
    for (int n = 1; n <= 6; ++n) {
      const KochLemmaReport r = koch_lemma_sweep(koch_graph(n));
      CHECK(r.passed());
      CHECK(r.hausdorff_flagged_count == 0);
      CHECK(r.max_hausdorff_ratio <= 6.0);
      CHECK(r.min_lower_bound_margin >= 1.0 - 1e-9);
    }
  }
}
