#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hfspan {

/// Default relative tolerance for geometric comparisons. The constructions
/// in this library (Koch coordinates, ellipse boundaries) are irrational, so
/// exact comparisons are never used.
inline constexpr double kDefaultRelTol = 1e-12;

/// A point in the Euclidean plane. Coordinates must be finite.
struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double x_, double y_);

  friend bool operator==(const Point&, const Point&) = default;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double k, const Point& p);

double dot(const Point& a, const Point& b);
/// z-component of the 3D cross product; positive when b is counter-clockwise of a.
double cross(const Point& a, const Point& b);
double norm(const Point& p);

/// Point at parameter lambda on the segment a->b (lambda = 0 gives a).
Point lerp(const Point& a, const Point& b, double lambda);

double dist(const Point& p, const Point& q);
double dist_sq(const Point& p, const Point& q);

/// Closed segment. a == b is legal everywhere.
struct Segment {
  Point a;
  Point b;

  double length() const { return dist(a, b); }
  bool degenerate() const { return a == b; }
};

double point_segment_distance(const Point& p, const Segment& s);

/// Parameter in [0,1] of the point of s closest to p (0 for a degenerate s).
double closest_parameter(const Point& p, const Segment& s);

/// Ordered list of at least one vertex.
class Polyline {
 public:
  explicit Polyline(std::vector<Point> vertices);
  Polyline(std::initializer_list<Point> vertices);

  /// Collapses runs of identical consecutive vertices.
  static Polyline normalized(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t edge_count() const { return vertices_.size() - 1; }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const Point& front() const { return vertices_.front(); }
  const Point& back() const { return vertices_.back(); }
  Segment edge(std::size_t i) const { return {vertices_[i], vertices_[i + 1]}; }

  double length() const;

 private:
  std::vector<Point> vertices_;
};

/// Distance from p to the nearest point of the polyline (its vertex for a
/// single-vertex polyline).
double point_polyline_distance(const Point& p, const Polyline& poly);

/// Ellipse with foci u, v whose boundary satisfies d(p,u) + d(p,v) = t d(u,v).
/// Every path between u and v of length at most t d(u,v) lies inside it.
struct StretchEllipse {
  Point u;
  Point v;
  double t = 1.0;

  StretchEllipse(Point u_, Point v_, double t_);

  double semi_major() const;
  double semi_minor() const;
  /// Boundary point at eccentric angle theta, measured from the direction u->v.
  Point boundary_point(double theta) const;
};

bool ellipse_contains(const StretchEllipse& e, const Point& p,
                      double rel_tol = kDefaultRelTol);

/// Largest distance from segment uv reached by the stretch ellipse:
/// d(u,v) sqrt(t^2 - 1) / 2. Throws std::domain_error for t < 1.
double ellipse_max_height(const Point& u, const Point& v, double t);

}  // namespace hfspan
