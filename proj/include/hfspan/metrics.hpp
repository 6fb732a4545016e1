#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hfspan/geometry.hpp"

namespace hfspan {

/// Both directed Hausdorff distances between a polyline and a segment.
/// The path-to-segment value is exact; segment-to-path is sampled and is
/// within `tolerance` of the true value.
struct HausdorffResult {
  double directed_path_to_segment = 0.0;
  double directed_segment_to_path = 0.0;
  double symmetric = 0.0;
  /// Point attaining `symmetric`: a polyline vertex or a sample on the segment.
  Point witness_point;
  double tolerance = 0.0;
};

/// Free parameter range [lo, hi] (as fractions of the segment) that the
/// owner may occupy while the dog stands on a polyline vertex.
struct FreeInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct FrechetResult {
  /// A leash length that is feasible; the true distance lies in
  /// [distance - tolerance, distance].
  double distance = 0.0;
  double tolerance = 0.0;
  /// Per-vertex free intervals at `distance`, when requested.
  std::optional<std::vector<FreeInterval>> decision_trace;
};

struct FarthestVertex {
  std::size_t index = 0;
  double distance = 0.0;
};

/// Vertex of `path` farthest from `s`. Since the distance to a segment is
/// convex along every edge, this is also the farthest point of the whole
/// polyline.
FarthestVertex farthest_vertex_from_segment(std::span<const Point> path, const Segment& s);

double directed_hausdorff_path_to_segment(std::span<const Point> path, const Segment& s);
double directed_hausdorff_path_to_segment(const Polyline& path, const Segment& s);

/// max over q on s of the distance from q to the polyline, evaluated on a
/// uniform sampling of s with spacing at most tol / 2.
double directed_hausdorff_segment_to_path(const Segment& s, const Polyline& path, double tol);

HausdorffResult hausdorff(const Polyline& path, const Segment& s, double tol);

/// Decision procedure: can the dog walk `path` while the owner walks `s`
/// monotonically with leash `eps`? O(path size).
bool frechet_decision(std::span<const Point> path, const Segment& s, double eps);

/// Continuous Frechet distance between a polyline and a segment whose
/// endpoints it shares (within tol). Throws std::invalid_argument otherwise.
FrechetResult frechet_polyline_segment(std::span<const Point> path, const Segment& s,
                                       double tol, bool with_trace = false);
FrechetResult frechet_polyline_segment(const Polyline& path, const Segment& s, double tol,
                                       bool with_trace = false);

/// Stack of path vertices that answers "farthest vertex from a segment"
/// queries in O(log n * hull size). Aligned power-of-two blocks of the
/// stack keep their convex hulls; the farthest point of a block from a
/// segment is a hull vertex because point-to-segment distance is convex.
/// Intended for depth-first walks over shortest-path trees, where the
/// current root-to-node path is exactly the stack.
class PathHullStack {
 public:
  void push(const Point& p);
  void pop();
  void clear();
  std::size_t size() const { return points_.size(); }
  std::span<const Point> points() const { return points_; }

  /// Largest distance from any stacked vertex to `s`. Requires size() >= 1.
  double farthest_distance(const Segment& s) const;

 private:
  static constexpr std::size_t kMinLevel = 4;  // blocks of 16 points and up

  std::vector<Point> points_;
  // hulls_[level - kMinLevel][block]
  std::vector<std::vector<std::vector<Point>>> hulls_;
};

/// Discrete Frechet (coupling) distance over the vertex sequences.
double discrete_frechet(const Polyline& a, const Polyline& b);

/// Inserts evenly spaced vertices so that no edge exceeds max_edge. The
/// original vertices are kept in order.
Polyline densify(const Polyline& path, double max_edge);

}  // namespace hfspan
