#include "hfspan/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace hfspan {

namespace {

void require_distinct(const std::vector<Point>& points) {
  std::vector<std::pair<double, double>> sorted;
  sorted.reserve(points.size());
  for (const Point& p : points) sorted.emplace_back(p.x, p.y);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("point set contains duplicate points");
  }
}

}  // namespace

GeoGraph::GeoGraph(std::vector<Point> vertices)
    : points_(std::move(vertices)), adjacency_(points_.size()) {
  require_distinct(points_);
}

std::uint64_t GeoGraph::key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

void GeoGraph::add_edge(VertexId u, VertexId v) {
  if (u >= points_.size() || v >= points_.size()) {
    throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u) + ", " +
                            std::to_string(v) + ")");
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (!edge_keys_.insert(key(u, v)).second) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
  }
  const double w = dist(points_[u], points_[v]);
  edges_.push_back({u, v, w});
  adjacency_[u].push_back({v, w});
  adjacency_[v].push_back({u, w});
}

bool GeoGraph::has_edge(VertexId u, VertexId v) const {
  return edge_keys_.contains(key(u, v));
}

std::vector<VertexId> ShortestPathTree::path_to(VertexId target) const {
  if (!reachable(target)) return {};
  std::vector<VertexId> out;
  for (VertexId v = target; v != npos; v = predecessor[v]) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return out;
}

ShortestPathTree shortest_path_tree(const GeoGraph& g, VertexId source, double radius) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw std::out_of_range("source vertex out of range");
  constexpr double inf = std::numeric_limits<double>::infinity();
  ShortestPathTree tree;
  tree.source = source;
  tree.distance.assign(n, inf);
  tree.predecessor.assign(n, ShortestPathTree::npos);
  std::vector<char> settled(n, 0);

  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  tree.distance[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (settled[u]) continue;
    if (d > radius) break;
    settled[u] = 1;
    for (const Neighbor& nb : g.neighbors(u)) {
      if (settled[nb.to]) continue;
      const double cand = d + nb.weight;
      double& best = tree.distance[nb.to];
      VertexId& pred = tree.predecessor[nb.to];
      if (cand < best || (cand == best && u < pred)) {
        if (cand < best) queue.emplace(cand, nb.to);
        best = cand;
        pred = u;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!settled[v]) {
      tree.distance[v] = inf;
      tree.predecessor[v] = ShortestPathTree::npos;
    }
  }
  return tree;
}

GeoGraph complete_graph(std::vector<Point> points) {
  GeoGraph g(std::move(points));
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) g.add_edge(u, v);
  }
  return g;
}

PathResult make_path(const GeoGraph& g, std::vector<VertexId> vertices) {
  if (vertices.empty()) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Point> pts;
  pts.reserve(vertices.size());
  double length = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    pts.push_back(g.point(vertices[i]));
    if (i > 0) {
      if (!g.has_edge(vertices[i - 1], vertices[i])) {
        throw std::invalid_argument("path uses a missing edge (" + std::to_string(vertices[i - 1]) +
                                    ", " + std::to_string(vertices[i]) + ")");
      }
      length += dist(pts[i - 1], pts[i]);
    }
  }
  return {std::move(vertices), Polyline(std::move(pts)), length};
}

std::optional<PathResult> shortest_path(const GeoGraph& g, VertexId u, VertexId v) {
  if (v >= g.vertex_count()) throw std::out_of_range("target vertex out of range");
  const ShortestPathTree tree = shortest_path_tree(g, u);
  if (!tree.reachable(v)) return std::nullopt;
  PathResult result = make_path(g, tree.path_to(v));
  // Keep the Dijkstra sum so stretch agrees bit-for-bit with the sweeps.
  result.length = tree.distance[v];
  return result;
}

double stretch(const GeoGraph& g, VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("stretch is undefined for coincident points");
  const ShortestPathTree tree = shortest_path_tree(g, u);
  if (!tree.reachable(v)) return std::numeric_limits<double>::infinity();
  return tree.distance[v] / dist(g.point(u), g.point(v));
}

StretchWitness max_stretch(const GeoGraph& g) {
  if (g.vertex_count() < 2) throw std::invalid_argument("max_stretch needs at least two vertices");
  StretchWitness best{-1.0, 0, 0};
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const ShortestPathTree tree = shortest_path_tree(g, u);
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      const double ratio = tree.distance[v] / dist(g.point(u), g.point(v));
      if (ratio > best.value) best = {ratio, u, v};
    }
  }
  return best;
}

}  // namespace hfspan
