#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "hfspan/metrics.hpp"
#include "oracles.hpp"

using namespace hfspan;

namespace {

const Segment kUnit{{0, 0}, {1, 0}};

std::vector<Point> to_vec(const Polyline& p) { return {p.vertices().begin(), p.vertices().end()}; }

Point rotate(const Point& p, double angle, const Point& shift) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y};
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("path to segment examples") {
    CHECK(directed_hausdorff_path_to_segment(Polyline{{0, 0}, {0.5, 0.3}, {1, 0}}, kUnit) ==
          doctest::Approx(0.3));
    CHECK(directed_hausdorff_path_to_segment(Polyline{{0, 0}, {1, 0}}, kUnit) == 0.0);
    const std::vector<Point> corner{{0, 0}, {0, 1}, {1, 1}};
    const double got = directed_hausdorff_path_to_segment(Polyline(corner), Segment{{0, 0}, {1, 1}});
    CHECK(got == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(got == doctest::Approx(oracle::hausdorff_path_to_segment(corner, {0, 0}, {1, 1}, 1e-3))
                     .epsilon(1e-6));
  }

  TEST_CASE("farthest vertex reports its index") {
    const std::vector<Point> pts{{0, 0}, {0.2, 0.1}, {0.5, -0.4}, {1, 0}};
    const FarthestVertex f = farthest_vertex_from_segment(pts, kUnit);
    CHECK(f.index == 2);
    CHECK(f.distance == doctest::Approx(0.4));
  }

  TEST_CASE("segment to path examples") {
    const double tol = 1e-6;
    CHECK(directed_hausdorff_segment_to_path(kUnit, Polyline{{0, 0}, {1, 0}}, tol) <= tol);
    const double bump = directed_hausdorff_segment_to_path(kUnit, Polyline{{0, 0}, {0.5, 0.3}, {1, 0}}, tol);
    CHECK(bump >= 0.0);
    CHECK(bump <= 0.3 + tol);
  }

  TEST_CASE("segment to path on a square detour") {
    // The segment's midpoint is 0.5 from both vertical sides of the detour.
    const std::vector<Point> detour{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    const double tol = 1e-6;
    const double got = directed_hausdorff_segment_to_path(kUnit, Polyline(detour), tol);
    const double reference = oracle::hausdorff_segment_to_path({0, 0}, {1, 0}, detour, 1e-4);
    CHECK(reference == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::abs(got - reference) <= tol);
  }

  TEST_CASE("hausdorff result fields") {
    const HausdorffResult same = hausdorff(Polyline{{0, 0}, {1, 0}}, kUnit, 1e-6);
    CHECK(same.directed_path_to_segment == 0.0);
    CHECK(same.directed_segment_to_path <= 1e-6);
    CHECK(same.symmetric <= 1e-6);

    const HausdorffResult bump = hausdorff(Polyline{{0, 0}, {0.5, 0.3}, {1, 0}}, kUnit, 1e-6);
    CHECK(bump.symmetric == doctest::Approx(0.3).epsilon(1e-6));
    CHECK(bump.witness_point == Point{0.5, 0.3});

    const std::vector<Point> corner{{0, 0}, {0, 1}, {1, 1}};
    const Segment diag{{0, 0}, {1, 1}};
    const HausdorffResult c = hausdorff(Polyline(corner), diag, 1e-6);
    CHECK(c.symmetric == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-6));
    CHECK(c.directed_segment_to_path == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(std::abs(c.directed_segment_to_path -
                   oracle::hausdorff_segment_to_path({0, 0}, {1, 1}, corner, 1e-4)) <= 1e-4);
    CHECK(c.tolerance == 1e-6);
  }

  TEST_CASE("frechet examples against the discrete oracle") {
    const double tol = 1e-9;
    CHECK(frechet_polyline_segment(Polyline{{0, 0}, {1, 0}}, kUnit, tol).distance <= tol);

    const double delta = 1e-3;
    const Polyline seg{{0, 0}, {1, 0}};
    const Polyline bump{{0, 0}, {0.5, 0.3}, {1, 0}};
    const double fb = frechet_polyline_segment(bump, kUnit, tol).distance;
    const double ob = oracle::discrete_frechet(to_vec(densify(bump, delta)), to_vec(densify(seg, delta)));
    CHECK(fb == doctest::Approx(0.3).epsilon(1e-9));
    CHECK(std::abs(fb - ob) <= tol + 2 * delta);

    const Polyline back{{0, 0}, {0.5, 0}, {0.25, 0}, {1, 0}};
    const double fk = frechet_polyline_segment(back, kUnit, tol).distance;
    const double ok = oracle::discrete_frechet(to_vec(densify(back, delta)), to_vec(densify(seg, delta)));
    CHECK(fk == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(std::abs(fk - ok) <= tol + 2 * delta);
  }

  TEST_CASE("frechet rejects mismatched endpoints") {
    CHECK_THROWS_AS(frechet_polyline_segment(Polyline{{0, 0}, {1, 0.1}}, kUnit, 1e-9),
                    std::invalid_argument);
    CHECK_THROWS_AS(frechet_polyline_segment(Polyline{{0.1, 0}, {1, 0}}, kUnit, 1e-9),
                    std::invalid_argument);
  }

  TEST_CASE("frechet decision is monotone and brackets the distance") {
    std::mt19937 rng(21);
    for (int i = 0; i < 100; ++i) {
      const auto path = oracle::random_polyline(rng, {0, 0}, {1, 0}, 1 + i % 7, 0.3);
      const double f = frechet_polyline_segment(path, kUnit, 1e-10).distance;
      CHECK(frechet_decision(path, kUnit, f));
      CHECK(frechet_decision(path, kUnit, f * 1.01 + 1e-9));
      CHECK_FALSE(frechet_decision(path, kUnit, f - 1e-6));
    }
  }

  TEST_CASE("frechet trace lists one free interval per vertex") {
    const Polyline bump{{0, 0}, {0.5, 0.3}, {1, 0}};
    const FrechetResult r = frechet_polyline_segment(bump, kUnit, 1e-9, true);
    REQUIRE(r.decision_trace.has_value());
    CHECK(r.decision_trace->size() == 3);
    for (const FreeInterval& iv : *r.decision_trace) CHECK(iv.lo <= iv.hi + 1e-12);
  }

  TEST_CASE("frechet dominates both hausdorff directions") {
    std::mt19937 rng(33);
    for (int i = 0; i < 100; ++i) {
      const auto path = oracle::random_polyline(rng, {0, 0}, {1, 0}, 1 + i % 9, 0.25);
      const Polyline p(path);
      const double tol = 1e-6;
      const double f = frechet_polyline_segment(p, kUnit, 1e-9).distance;
      const HausdorffResult h = hausdorff(p, kUnit, tol);
      CHECK(f >= h.directed_path_to_segment - 1e-9);
      CHECK(f >= h.directed_segment_to_path - tol);
    }
  }

  TEST_CASE("discrete frechet examples") {
    const Polyline a{{0, 0}, {1, 0}};
    CHECK(discrete_frechet(a, a) == 0.0);
    CHECK(discrete_frechet(a, Polyline{{0, 1}, {1, 1}}) == doctest::Approx(1.0));
    const double conv =
        discrete_frechet(densify(a, 0.01), densify(Polyline{{0, 0}, {0.5, 0.3}, {1, 0}}, 0.01));
    CHECK(std::abs(conv - 0.3) <= 0.02);
  }

  TEST_CASE("discrete frechet matches the table oracle") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
      std::vector<Point> a, b;
      for (int k = 0; k < 2 + i % 9; ++k) a.push_back({u(rng), u(rng)});
      for (int k = 0; k < 1 + i % 6; ++k) b.push_back({u(rng), u(rng)});
      CHECK(discrete_frechet(Polyline(a), Polyline(b)) ==
            doctest::Approx(oracle::discrete_frechet(a, b)).epsilon(1e-12));
    }
  }

  TEST_CASE("discrete frechet does not increase under refinement") {
    std::mt19937 rng(9);
    for (int i = 0; i < 30; ++i) {
      const Polyline p(oracle::random_polyline(rng, {0, 0}, {1, 0}, 4, 0.2));
      const Polyline s{{0, 0}, {1, 0}};
      const double coarse = discrete_frechet(densify(p, 0.1), densify(s, 0.1));
      const double fine = discrete_frechet(densify(densify(p, 0.1), 0.05), densify(densify(s, 0.1), 0.05));
      CHECK(fine <= coarse + 1e-12);
    }
  }

  TEST_CASE("densify examples") {
    const Polyline d = densify(Polyline{{0, 0}, {1, 0}}, 0.5);
    REQUIRE(d.size() == 3);
    CHECK(d[1] == Point{0.5, 0});
    CHECK(densify(Polyline{{0, 0}}, 0.1).size() == 1);
    const Polyline c{{0, 0}, {0, 1}, {1, 1}};
    CHECK(densify(c, 1.0).size() == 3);
  }

  TEST_CASE("densify keeps vertices, bounds edges and preserves path to segment") {
    std::mt19937 rng(4);
    for (int i = 0; i < 50; ++i) {
      const Polyline p(oracle::random_polyline(rng, {0, 0}, {1, 0}, 5, 0.3));
      const Polyline d = densify(p, 0.03);
      for (std::size_t e = 0; e < d.edge_count(); ++e) CHECK(d.edge(e).length() <= 0.03 + 1e-12);
      std::size_t k = 0;
      for (const Point& v : d.vertices()) {
        if (k < p.size() && v == p[k]) ++k;
      }
      CHECK(k == p.size());
      CHECK(directed_hausdorff_path_to_segment(d, kUnit) ==
            doctest::Approx(directed_hausdorff_path_to_segment(p, kUnit)).epsilon(1e-12));
    }
  }

  TEST_CASE("metrics are invariant under rigid motions") {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> sh(-10.0, 10.0);
    for (int i = 0; i < 50; ++i) {
      const auto path = oracle::random_polyline(rng, {0, 0}, {1, 0}, 6, 0.3);
      const double a = ang(rng);
      const Point shift{sh(rng), sh(rng)};
      std::vector<Point> moved;
      for (const Point& p : path) moved.push_back(rotate(p, a, shift));
      const Segment s2{rotate({0, 0}, a, shift), rotate({1, 0}, a, shift)};
      // Pin the moved endpoints exactly to the moved segment.
      moved.front() = s2.a;
      moved.back() = s2.b;
      const double h1 = directed_hausdorff_path_to_segment(Polyline(path), kUnit);
      const double h2 = directed_hausdorff_path_to_segment(Polyline(moved), s2);
      CHECK(h2 == doctest::Approx(h1).epsilon(1e-9));
      const double f1 = frechet_polyline_segment(path, kUnit, 1e-10).distance;
      const double f2 = frechet_polyline_segment(moved, s2, 1e-10).distance;
      CHECK(std::abs(f1 - f2) <= 1e-9 * std::max(1.0, f1));
    }
  }

  TEST_CASE("path hull stack matches brute force under random pushes and pops") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> op(0, 9);
    PathHullStack stack;
    std::vector<Point> mirror;
    for (int step = 0; step < 4000; ++step) {
      if (!mirror.empty() && op(rng) < 3) {
        stack.pop();
        mirror.pop_back();
      } else {
        const Point p{u(rng) + 0.001 * step, u(rng)};
        stack.push(p);
        mirror.push_back(p);
      }
      REQUIRE(stack.size() == mirror.size());
      if (mirror.empty()) continue;
      const Segment s{{u(rng), u(rng)}, {u(rng), u(rng)}};
      double brute = 0.0;
      for (const Point& p : mirror) brute = std::max(brute, point_segment_distance(p, s));
      CHECK(stack.farthest_distance(s) == doctest::Approx(brute).epsilon(1e-12));
    }
    stack.clear();
    CHECK(stack.size() == 0);
    CHECK_THROWS_AS(stack.farthest_distance(kUnit), std::logic_error);
  }
}
