#include "hfspan/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hfspan {

FarthestVertex farthest_vertex_from_segment(std::span<const Point> path, const Segment& s) {
  // Squared distances in the hot loop; one sqrt at the end.
  const double ax = s.a.x;
  const double ay = s.a.y;
  const double dx = s.b.x - ax;
  const double dy = s.b.y - ay;
  const double len2 = dx * dx + dy * dy;
  const double inv = len2 > 0.0 ? 1.0 / len2 : 0.0;
  FarthestVertex best;
  double best_sq = -1.0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const double px = path[i].x - ax;
    const double py = path[i].y - ay;
    const double lambda = std::clamp((px * dx + py * dy) * inv, 0.0, 1.0);
    const double ex = px - lambda * dx;
    const double ey = py - lambda * dy;
    const double d2 = ex * ex + ey * ey;
    if (d2 > best_sq) {
      best_sq = d2;
      best.index = i;
    }
  }
  best.distance = std::sqrt(best_sq);
  return best;
}

double directed_hausdorff_path_to_segment(std::span<const Point> path, const Segment& s) {
  return farthest_vertex_from_segment(path, s).distance;
}

double directed_hausdorff_path_to_segment(const Polyline& path, const Segment& s) {
  return directed_hausdorff_path_to_segment(path.vertices(), s);
}

namespace {

struct SampledMax {
  double value = 0.0;
  Point where;
};

SampledMax sample_segment_to_path(const Segment& s, const Polyline& path, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double len = s.length();
  const auto samples = static_cast<std::size_t>(std::max(1.0, std::ceil(len / (tol / 2.0))));
  SampledMax best{-1.0, s.a};
  for (std::size_t k = 0; k <= samples; ++k) {
    const Point q = lerp(s.a, s.b, static_cast<double>(k) / static_cast<double>(samples));
    const double d = point_polyline_distance(q, path);
    if (d > best.value) best = {d, q};
  }
  return best;
}

}  // namespace

double directed_hausdorff_segment_to_path(const Segment& s, const Polyline& path, double tol) {
  return sample_segment_to_path(s, path, tol).value;
}

HausdorffResult hausdorff(const Polyline& path, const Segment& s, double tol) {
  HausdorffResult result;
  const FarthestVertex far = farthest_vertex_from_segment(path.vertices(), s);
  const SampledMax back = sample_segment_to_path(s, path, tol);
  result.directed_path_to_segment = far.distance;
  result.directed_segment_to_path = back.value;
  result.tolerance = tol;
  if (far.distance >= back.value) {
    result.symmetric = far.distance;
    result.witness_point = path[far.index];
  } else {
    result.symmetric = back.value;
    result.witness_point = back.where;
  }
  return result;
}

namespace {

// Path vertices expressed in the frame of the segment: x along a->b, h the
// signed offset from the supporting line. Both in length units.
struct Framed {
  std::vector<double> x;
  std::vector<double> h;
  double length = 0.0;
};

Framed to_frame(std::span<const Point> path, const Segment& s) {
  Framed f;
  f.length = s.length();
  const Point e = (1.0 / f.length) * (s.b - s.a);
  f.x.reserve(path.size());
  f.h.reserve(path.size());
  for (const Point& p : path) {
    const Point r = p - s.a;
    f.x.push_back(dot(r, e));
    f.h.push_back(cross(e, r));
  }
  return f;
}

struct Verdict {
  bool feasible = true;
  // On failure: the owner is pinned at or beyond lo(first) but must be at
  // or before hi(second). first == second marks a vertex out of reach.
  std::size_t first = 0;
  std::size_t second = 0;
};

Verdict decide(const Framed& f, double eps, std::vector<FreeInterval>* trace) {
  const double eps2 = eps * eps;
  double reached = 0.0;
  std::size_t reached_from = 0;
  const std::size_t m = f.x.size();
  if (trace) trace->assign(m, {});
  for (std::size_t j = 0; j < m; ++j) {
    const double h2 = f.h[j] * f.h[j];
    if (h2 > eps2) return {false, j, j};
    const double half = std::sqrt(eps2 - h2);
    const double lo = std::max(0.0, f.x[j] - half);
    const double hi = std::min(f.length, f.x[j] + half);
    if (lo > hi) return {false, j, j};
    if (trace) (*trace)[j] = {lo / f.length, hi / f.length};
    if (lo > reached) {
      reached = lo;
      reached_from = j;
    }
    if (reached > hi) return {false, reached_from, j};
  }
  return {};
}

// Smallest leash at which vertex `i` (earlier) no longer forces the owner
// past where vertex `j` (later) can still be reached: the distance from
// either vertex to the point of the line equidistant to both.
double critical_value(const Framed& f, std::size_t i, std::size_t j) {
  const double xi = f.x[i];
  const double xj = f.x[j];
  const double hi2 = f.h[i] * f.h[i];
  const double hj2 = f.h[j] * f.h[j];
  if (i == j || !(xi > xj)) return std::sqrt(std::max(hi2, hj2));
  const double xm = (xi * xi - xj * xj + hi2 - hj2) / (2.0 * (xi - xj));
  return std::sqrt((xi - xm) * (xi - xm) + hi2);
}

}  // namespace

bool frechet_decision(std::span<const Point> path, const Segment& s, double eps) {
  if (path.empty()) throw std::invalid_argument("empty path");
  if (dist(path.front(), s.a) > eps || dist(path.back(), s.b) > eps) return false;
  if (s.degenerate()) {
    return directed_hausdorff_path_to_segment(path, s) <= eps;
  }
  return decide(to_frame(path, s), eps, nullptr).feasible;
}

FrechetResult frechet_polyline_segment(std::span<const Point> path, const Segment& s,
                                       double tol, bool with_trace) {
  if (path.empty()) throw std::invalid_argument("empty path");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double start_gap = dist(path.front(), s.a);
  const double end_gap = dist(path.back(), s.b);
  if (start_gap > tol || end_gap > tol) {
    throw std::invalid_argument("polyline endpoints must coincide with the segment endpoints");
  }

  FrechetResult result;
  result.tolerance = tol;
  const double lower = std::max({directed_hausdorff_path_to_segment(path, s), start_gap, end_gap});

  if (s.degenerate()) {
    // The owner never moves; the leash must reach every vertex.
    result.distance = lower;
    if (with_trace) result.decision_trace = std::vector<FreeInterval>(path.size(), {0.0, 0.0});
    return result;
  }

  const Framed f = to_frame(path, s);

  // Ascend through critical values: each failed decision names a pair of
  // vertices whose constraint is a valid lower bound on the answer.
  double eps = lower;
  bool found = false;
  for (int iter = 0; iter < 64; ++iter) {
    const Verdict v = decide(f, eps, nullptr);
    if (v.feasible) {
      found = true;
      break;
    }
    const double next = critical_value(f, v.first, v.second);
    if (!(next > eps)) break;  // rounding stall; finish by bisection
    eps = next;
  }

  if (!found) {
    double lo = eps;
    double hi = std::max(eps, Polyline(std::vector<Point>(path.begin(), path.end())).length() / 2.0);
    while (!decide(f, hi, nullptr).feasible) hi = 2.0 * hi + tol;
    while (hi - lo > tol) {
      const double mid = lo + (hi - lo) / 2.0;
      if (decide(f, mid, nullptr).feasible) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    eps = hi;
  }

  result.distance = eps;
  if (with_trace) {
    std::vector<FreeInterval> trace;
    decide(f, eps, &trace);
    result.decision_trace = std::move(trace);
  }
  return result;
}

FrechetResult frechet_polyline_segment(const Polyline& path, const Segment& s, double tol,
                                       bool with_trace) {
  return frechet_polyline_segment(path.vertices(), s, tol, with_trace);
}

double discrete_frechet(const Polyline& a, const Polyline& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<double> prev(m);
  std::vector<double> curr(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = dist(a[i], b[j]);
      double reach;
      if (i == 0 && j == 0) {
        reach = d;
      } else if (i == 0) {
        reach = std::max(curr[j - 1], d);
      } else if (j == 0) {
        reach = std::max(prev[0], d);
      } else {
        reach = std::max(std::min({prev[j], prev[j - 1], curr[j - 1]}), d);
      }
      curr[j] = reach;
    }
    std::swap(prev, curr);
  }
  return prev[m - 1];
}

Polyline densify(const Polyline& path, double max_edge) {
  if (!(max_edge > 0.0)) throw std::invalid_argument("max_edge must be positive");
  std::vector<Point> out;
  out.push_back(path.front());
  for (std::size_t i = 0; i < path.edge_count(); ++i) {
    const Point& p = path[i];
    const Point& q = path[i + 1];
    const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(dist(p, q) / max_edge)));
    for (std::size_t k = 1; k < pieces; ++k) {
      out.push_back(lerp(p, q, static_cast<double>(k) / static_cast<double>(pieces)));
    }
    out.push_back(q);
  }
  return Polyline(std::move(out));
}

}  // namespace hfspan

namespace hfspan {

namespace {

// Andrew's monotone chain; collinear points are dropped.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], *it - hull[k - 2]) <= 0.0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

double farthest_sq(std::span<const Point> pts, const Segment& s) {
  const double ax = s.a.x;
  const double ay = s.a.y;
  const double dx = s.b.x - ax;
  const double dy = s.b.y - ay;
  const double len2 = dx * dx + dy * dy;
  const double inv = len2 > 0.0 ? 1.0 / len2 : 0.0;
  double best = 0.0;
  for (const Point& p : pts) {
    const double px = p.x - ax;
    const double py = p.y - ay;
    const double lambda = std::clamp((px * dx + py * dy) * inv, 0.0, 1.0);
    const double ex = px - lambda * dx;
    const double ey = py - lambda * dy;
    best = std::max(best, ex * ex + ey * ey);
  }
  return best;
}

}  // namespace

void PathHullStack::push(const Point& p) {
  points_.push_back(p);
  const std::size_t size = points_.size();
  for (std::size_t level = kMinLevel; (size & ((std::size_t{1} << level) - 1)) == 0; ++level) {
    const std::size_t width = std::size_t{1} << level;
    const std::size_t block = size / width - 1;
    const std::size_t slot = level - kMinLevel;
    if (hulls_.size() <= slot) hulls_.resize(slot + 1);
    auto& row = hulls_[slot];
    if (row.size() <= block) row.resize(block + 1);
    std::vector<Point> merged;
    if (level == kMinLevel) {
      merged.assign(points_.end() - static_cast<std::ptrdiff_t>(width), points_.end());
    } else {
      const auto& below = hulls_[slot - 1];
      merged = below[2 * block];
      merged.insert(merged.end(), below[2 * block + 1].begin(), below[2 * block + 1].end());
    }
    row[block] = convex_hull(std::move(merged));
  }
}

void PathHullStack::pop() { points_.pop_back(); }

void PathHullStack::clear() { points_.clear(); }

double PathHullStack::farthest_distance(const Segment& s) const {
  if (points_.empty()) throw std::logic_error("farthest_distance on an empty stack");
  double best = 0.0;
  std::size_t pos = 0;
  const std::size_t size = points_.size();
  for (std::size_t slot = hulls_.size(); slot-- > 0;) {
    const std::size_t width = std::size_t{1} << (slot + kMinLevel);
    if (pos + width <= size) {
      best = std::max(best, farthest_sq(hulls_[slot][pos / width], s));
      pos += width;
    }
  }
  best = std::max(best, farthest_sq(std::span<const Point>(points_).subspan(pos), s));
  return std::sqrt(best);
}

}  // namespace hfspan
