#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hfspan/geometry.hpp"

namespace hfspan {

using VertexId = std::size_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;
};

struct Neighbor {
  VertexId to = 0;
  double weight = 0.0;
};

/// Undirected Euclidean graph. Vertices are distinct points; every edge
/// weight is the distance between its endpoints and is never supplied by
/// the caller.
class GeoGraph {
 public:
  GeoGraph() = default;
  /// Throws std::invalid_argument if two points coincide.
  explicit GeoGraph(std::vector<Point> vertices);

  /// Throws on self-loops, duplicate edges and out-of-range indices.
  void add_edge(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;

  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Point& point(VertexId v) const { return points_.at(v); }
  std::span<const Point> points() const { return points_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_.at(v); }

 private:
  static std::uint64_t key(VertexId u, VertexId v);

  std::vector<Point> points_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

struct PathResult {
  std::vector<VertexId> vertex_indices;
  Polyline polyline;
  double length = 0.0;
};

/// Single-source shortest-path tree. Among equal-length routes the
/// predecessor with the smallest index wins.
struct ShortestPathTree {
  VertexId source = 0;
  std::vector<double> distance;
  /// npos for the source and for unreachable vertices.
  std::vector<VertexId> predecessor;

  static constexpr VertexId npos = std::numeric_limits<VertexId>::max();

  bool reachable(VertexId v) const { return distance[v] < std::numeric_limits<double>::infinity(); }
  /// Vertices from the source to `target`, inclusive. Empty if unreachable.
  std::vector<VertexId> path_to(VertexId target) const;
};

/// Dijkstra from `source`. Exploration stops once the settled distance
/// exceeds `radius`; vertices beyond it are reported unreachable.
ShortestPathTree shortest_path_tree(const GeoGraph& g, VertexId source,
                                    double radius = std::numeric_limits<double>::infinity());

GeoGraph complete_graph(std::vector<Point> points);

/// std::nullopt when v cannot be reached from u.
std::optional<PathResult> shortest_path(const GeoGraph& g, VertexId u, VertexId v);

PathResult make_path(const GeoGraph& g, std::vector<VertexId> vertices);

/// Shortest-path length over Euclidean distance; +infinity if unreachable.
double stretch(const GeoGraph& g, VertexId u, VertexId v);

struct StretchWitness {
  double value = 1.0;
  VertexId u = 0;
  VertexId v = 0;
};

/// Largest stretch over all vertex pairs, with the lexicographically
/// smallest pair attaining it.
StretchWitness max_stretch(const GeoGraph& g);

}  // namespace hfspan
