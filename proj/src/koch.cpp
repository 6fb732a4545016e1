#include "hfspan/koch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hfspan/metrics.hpp"

namespace hfspan {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

std::size_t pow4(int e) { return std::size_t{1} << (2 * e); }

}  // namespace

KochGraph::KochGraph(GeoGraph graph, std::vector<int> levels, int generation)
    : graph_(std::move(graph)), levels_(std::move(levels)), generation_(generation) {
  if (levels_.size() != graph_.vertex_count()) {
    throw std::invalid_argument("one level per vertex required");
  }
}

std::size_t KochGraph::stride(int i) const {
  if (i < 0 || i > generation_) throw std::out_of_range("generation out of range");
  return pow4(generation_ - i);
}

KochGraph koch_graph(int n, int max_generation) {
  if (n < 0) throw std::invalid_argument("generation must be non-negative");
  if (n > max_generation) {
    throw std::invalid_argument("generation " + std::to_string(n) + " exceeds the maximum of " +
                                std::to_string(max_generation));
  }
  std::vector<Point> pts{{0.0, 0.0}, {1.0, 0.0}};
  std::vector<int> levels{0, 0};
  const double bump = kSqrt3 / 6.0;
  for (int gen = 1; gen <= n; ++gen) {
    std::vector<Point> next;
    std::vector<int> next_levels;
    next.reserve(4 * pts.size());
    next_levels.reserve(4 * pts.size());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const Point& p = pts[i];
      const Point& q = pts[i + 1];
      const Point d = q - p;
      const Point left{-d.y, d.x};
      next.push_back(p);
      next_levels.push_back(levels[i]);
      next.push_back(lerp(p, q, 1.0 / 3.0));
      next.push_back(lerp(p, q, 0.5) + bump * left);
      next.push_back(lerp(p, q, 2.0 / 3.0));
      next_levels.insert(next_levels.end(), 3, gen);
    }
    next.push_back(pts.back());
    next_levels.push_back(levels.back());
    pts = std::move(next);
    levels = std::move(next_levels);
  }
  GeoGraph g(std::move(pts));
  for (VertexId v = 0; v + 1 < g.vertex_count(); ++v) g.add_edge(v, v + 1);
  return KochGraph(std::move(g), std::move(levels), n);
}

int vertex_level(const KochGraph& k, VertexId v) { return k.levels()[v]; }

int pair_level_of_sequence(std::span<const int> levels) {
  if (levels.size() < 2) throw std::invalid_argument("pair level needs at least two entries");
  int lowest = std::numeric_limits<int>::max();
  int second = std::numeric_limits<int>::max();
  for (int l : levels) {
    if (l < lowest) {
      second = lowest;
      lowest = l;
    } else if (l < second) {
      second = l;
    }
  }
  return second;
}

int pair_level(const KochGraph& k, VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("pair level needs two distinct vertices");
  if (u > v) std::swap(u, v);
  if (v >= k.vertex_count()) throw std::out_of_range("vertex out of range");
  return pair_level_of_sequence(k.levels().subspan(u, v - u + 1));
}

TurnCase classify_turn(const Point& v1, const Point& v2, const Point& v3) {
  const Point a = v2 - v1;
  const Point b = v3 - v2;
  const double la = norm(a);
  const double lb = norm(b);
  if (la == 0.0 || std::abs(la - lb) > 1e-9 * std::max(la, lb)) {
    throw std::invalid_argument("triple edges must have equal, non-zero length");
  }
  const double turn = std::atan2(cross(a, b), dot(a, b)) * 180.0 / std::numbers::pi;
  if (std::abs(turn - 60.0) < 1e-6) return TurnCase::two_forty;
  if (std::abs(turn + 120.0) < 1e-6) return TurnCase::sixty;
  throw std::invalid_argument("triple turns by " + std::to_string(turn) +
                              " degrees; expected +60 or -120");
}

double BoundingRect::diagonal() const { return dist(corners[0], corners[2]); }

bool BoundingRect::contains(const Point& p, double slack) const {
  const Point ea = corners[1] - corners[0];
  const Point eb = corners[3] - corners[0];
  const double la = norm(ea);
  const double lb = norm(eb);
  const Point r = p - corners[0];
  const double sa = dot(r, ea) / la;
  const double sb = dot(r, eb) / lb;
  return sa >= -slack && sa <= la + slack && sb >= -slack && sb <= lb + slack;
}

BoundingRect bounding_rectangle(const Point& v1, const Point& v2, const Point& v3, int level1,
                                int level3) {
  BoundingRect rect;
  rect.v1 = v1;
  rect.v2 = v2;
  rect.v3 = v3;
  rect.turn = classify_turn(v1, v2, v3);
  if (rect.turn == TurnCase::sixty) {
    const Point base = v3 - v1;
    const Point rel = v2 - v1;
    const Point height = rel - (dot(rel, base) / dot(base, base)) * base;
    rect.corners = {v1, v3, v3 + height, v1 + height};
    return rect;
  }
  // The long side starts at the lower-level end of the triple and runs along
  // its edge; the opposite end is the far corner.
  const bool along_first = level1 < level3;
  const Point& anchor = along_first ? v1 : v3;
  const Point& far = along_first ? v3 : v1;
  const Point dir = (1.0 / dist(anchor, v2)) * (v2 - anchor);
  const Point span = far - anchor;
  const Point along = dot(span, dir) * dir;
  rect.corners = {anchor, anchor + along, far, anchor + (span - along)};
  return rect;
}

KochPairBounds koch_bounds_for_level(int level) {
  KochPairBounds b;
  b.level = level;
  b.hausdorff_upper = kSqrt3 / std::pow(3.0, level - 1);
  b.distance_lower = kSqrt3 / (2.0 * std::pow(3.0, level));
  return b;
}

KochPairBounds koch_pair_bounds(const KochGraph& k, VertexId u, VertexId v) {
  return koch_bounds_for_level(pair_level(k, u, v));
}

std::vector<KochEdgeViolation> edges_missing_top_level(const KochGraph& k) {
  std::vector<KochEdgeViolation> out;
  const int n = k.generation();
  for (const Edge& e : k.graph().edges()) {
    if (k.levels()[e.u] != n && k.levels()[e.v] != n) out.push_back({e.u, e.v});
  }
  return out;
}

std::vector<ThreeBetweenViolation> three_between_violations(const KochGraph& k) {
  std::vector<ThreeBetweenViolation> out;
  const auto levels = k.levels();
  for (int i = 1; i <= k.generation(); ++i) {
    const std::size_t step = k.stride(i - 1);
    for (VertexId a = 0; a + step < k.vertex_count(); a += step) {
      const VertexId b = a + step;
      const auto inside = levels.subspan(a + 1, b - a - 1);
      const auto count = static_cast<std::size_t>(std::count(inside.begin(), inside.end(), i));
      if (count != 3) out.push_back({i, a, b, count});
    }
  }
  return out;
}

RectangleCheck check_bounding_rectangles(const KochGraph& k, int max_generation, double slack) {
  RectangleCheck check;
  const int top = std::min(max_generation, k.generation());
  const auto levels = k.levels();
  for (int i = 1; i <= top; ++i) {
    const std::size_t step = k.stride(i);
    const double edge = std::pow(3.0, -i);
    const double tol = slack * edge;
    for (VertexId mid = step; mid + step < k.vertex_count(); mid += step) {
      const VertexId first = mid - step;
      const VertexId last = mid + step;
      ++check.triples;
      if (levels[first] == levels[last]) ++check.equal_level_triples;
      const BoundingRect rect = bounding_rectangle(k.point(first), k.point(mid), k.point(last),
                                                   levels[first], levels[last]);
      check.max_diagonal_ratio = std::max(check.max_diagonal_ratio, rect.diagonal() / (kSqrt3 * edge));

      bool shape_ok = true;
      if (rect.turn == TurnCase::two_forty) {
        // v1 and v3 are opposite corners; the chosen edge lies on a long side.
        const double long_side = dist(rect.corners[0], rect.corners[1]);
        const double short_side = dist(rect.corners[1], rect.corners[2]);
        shape_ok = std::abs(long_side - 1.5 * edge) <= tol &&
                   std::abs(short_side - kSqrt3 / 2.0 * edge) <= tol;
      } else {
        // v2 on the side opposite v1v3.
        const Segment opposite{rect.corners[2], rect.corners[3]};
        shape_ok = point_segment_distance(k.point(mid), opposite) <= tol &&
                   std::abs(dist(rect.corners[0], rect.corners[1]) - edge) <= tol;
      }
      if (!shape_ok) ++check.shape_violations;

      for (VertexId w = first; w <= last; ++w) {
        if (!rect.contains(k.point(w), tol)) {
          ++check.containment_violations;
          break;
        }
      }
    }
  }
  return check;
}

KochLemmaReport koch_lemma_sweep(const KochGraph& k, double slack) {
  constexpr std::size_t kKeep = 32;
  KochLemmaReport report;
  report.generation = k.generation();
  report.slack = slack;
  report.min_lower_bound_margin = std::numeric_limits<double>::infinity();
  const auto levels = k.levels();
  const std::size_t n = k.vertex_count();

  std::vector<KochPairBounds> by_level;
  for (int i = 0; i <= k.generation(); ++i) by_level.push_back(koch_bounds_for_level(i));

  PathHullStack stack;
  for (VertexId u = 0; u + 1 < n; ++u) {
    stack.clear();
    stack.push(k.point(u));
    int lowest = levels[u];
    int second = std::numeric_limits<int>::max();
    for (VertexId v = u + 1; v < n; ++v) {
      stack.push(k.point(v));
      const int l = levels[v];
      if (l < lowest) {
        second = lowest;
        lowest = l;
      } else if (l < second) {
        second = l;
      }
      const KochPairBounds& bounds = by_level[static_cast<std::size_t>(second)];
      const Segment uv{k.point(u), k.point(v)};
      const double d = uv.length();
      const double dh = stack.farthest_distance(uv);
      ++report.pairs_checked;

      const double ratio = dh / d;
      if (ratio > report.max_hausdorff_ratio) {
        report.max_hausdorff_ratio = ratio;
        report.ratio_witness_u = u;
        report.ratio_witness_v = v;
      }
      report.max_upper_bound_use = std::max(report.max_upper_bound_use, dh / bounds.hausdorff_upper);
      report.min_lower_bound_margin = std::min(report.min_lower_bound_margin, d / bounds.distance_lower);

      if (dh > bounds.hausdorff_upper + slack) {
        auto& bucket = second < 2 ? report.hausdorff_flagged : report.hausdorff_violations;
        ++(second < 2 ? report.hausdorff_flagged_count : report.hausdorff_violation_count);
        if (bucket.size() < kKeep) bucket.push_back({u, v, second, dh, bounds.hausdorff_upper});
      }
      if (d < bounds.distance_lower - slack) {
        ++report.distance_violation_count;
        if (report.distance_violations.size() < kKeep) {
          report.distance_violations.push_back({u, v, second, d, bounds.distance_lower});
        }
      }
    }
  }
  if (report.pairs_checked == 0) report.min_lower_bound_margin = 0.0;
  return report;
}

}  // namespace hfspan
