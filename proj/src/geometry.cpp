#include "hfspan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hfspan {

Point::Point(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x_) || !std::isfinite(y_)) {
    throw std::invalid_argument("point coordinates must be finite");
  }
}

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double k, const Point& p) { return {k * p.x, k * p.y}; }

double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
double norm(const Point& p) { return std::hypot(p.x, p.y); }

Point lerp(const Point& a, const Point& b, double lambda) {
  return {a.x + lambda * (b.x - a.x), a.y + lambda * (b.y - a.y)};
}

double dist(const Point& p, const Point& q) { return std::hypot(p.x - q.x, p.y - q.y); }

double dist_sq(const Point& p, const Point& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

double closest_parameter(const Point& p, const Segment& s) {
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return 0.0;
  const double lambda = ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / len2;
  return std::clamp(lambda, 0.0, 1.0);
}

double point_segment_distance(const Point& p, const Segment& s) {
  return dist(p, lerp(s.a, s.b, closest_parameter(p, s)));
}

Polyline::Polyline(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("polyline needs at least one vertex");
}

Polyline::Polyline(std::initializer_list<Point> vertices)
    : Polyline(std::vector<Point>(vertices)) {}

Polyline Polyline::normalized(std::vector<Point> vertices) {
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return Polyline(std::move(vertices));
}

double Polyline::length() const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    total += dist(vertices_[i], vertices_[i + 1]);
  }
  return total;
}

double point_polyline_distance(const Point& p, const Polyline& poly) {
  if (poly.size() == 1) return dist(p, poly.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.edge_count(); ++i) {
    best = std::min(best, point_segment_distance(p, poly.edge(i)));
  }
  return best;
}

StretchEllipse::StretchEllipse(Point u_, Point v_, double t_) : u(u_), v(v_), t(t_) {
  if (!(t_ >= 1.0)) {
    throw std::domain_error("stretch factor must be >= 1, got " + std::to_string(t_));
  }
}

double StretchEllipse::semi_major() const { return t * dist(u, v) / 2.0; }

double StretchEllipse::semi_minor() const { return ellipse_max_height(u, v, t); }

Point StretchEllipse::boundary_point(double theta) const {
  const double d = dist(u, v);
  const Point center = lerp(u, v, 0.5);
  // Axis directions; any orthonormal frame works when u == v.
  Point major{1.0, 0.0};
  if (d > 0.0) major = (1.0 / d) * (v - u);
  const Point minor{-major.y, major.x};
  return center + (semi_major() * std::cos(theta)) * major +
         (semi_minor() * std::sin(theta)) * minor;
}

bool ellipse_contains(const StretchEllipse& e, const Point& p, double rel_tol) {
  const double string_length = e.t * dist(e.u, e.v);
  return dist(p, e.u) + dist(p, e.v) <= string_length + rel_tol * string_length;
}

double ellipse_max_height(const Point& u, const Point& v, double t) {
  if (!(t >= 1.0)) {
    throw std::domain_error("stretch factor must be >= 1, got " + std::to_string(t));
  }
  return dist(u, v) * std::sqrt(t * t - 1.0) / 2.0;
}

}  // namespace hfspan
