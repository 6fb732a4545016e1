#include "hfspan/split_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hfspan {

double coordinate(const Point& p, std::size_t axis) { return axis == 0 ? p.x : p.y; }

Box Box::of(std::span<const Point> points, std::span<const VertexId> subset) {
  Box box;
  box.lo.fill(std::numeric_limits<double>::infinity());
  box.hi.fill(-std::numeric_limits<double>::infinity());
  for (VertexId id : subset) {
    for (std::size_t k = 0; k < kDim; ++k) {
      const double c = coordinate(points[id], k);
      box.lo[k] = std::min(box.lo[k], c);
      box.hi[k] = std::max(box.hi[k], c);
    }
  }
  return box;
}

double Box::longest_side() const { return side(longest_axis()); }

std::size_t Box::longest_axis() const {
  std::size_t best = 0;
  for (std::size_t k = 1; k < kDim; ++k) {
    if (side(k) > side(best)) best = k;
  }
  return best;
}

std::array<double, kDim> Box::center() const {
  std::array<double, kDim> c{};
  for (std::size_t k = 0; k < kDim; ++k) c[k] = (lo[k] + hi[k]) / 2.0;
  return c;
}

double Box::half_diagonal() const {
  double sum = 0.0;
  for (std::size_t k = 0; k < kDim; ++k) sum += side(k) * side(k);
  return std::sqrt(sum) / 2.0;
}

bool Box::contains(const Point& p) const {
  for (std::size_t k = 0; k < kDim; ++k) {
    const double c = coordinate(p, k);
    if (c < lo[k] || c > hi[k]) return false;
  }
  return true;
}

SplitTree::SplitTree(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("split tree needs at least one point");
  GeoGraph distinct_check(points_);  // throws on duplicates
  order_.resize(points_.size());
  std::iota(order_.begin(), order_.end(), VertexId{0});
  leaf_of_.assign(points_.size(), SplitNode::none);
  nodes_.reserve(2 * points_.size() - 1);
  build(0, points_.size(), SplitNode::none, 0);
  position_.resize(points_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
}

std::size_t SplitTree::build(std::size_t begin, std::size_t end, std::size_t parent,
                             std::size_t depth) {
  const std::size_t id = nodes_.size();
  nodes_.emplace_back();
  {
    SplitNode& node = nodes_.back();
    node.begin = begin;
    node.end = end;
    node.parent = parent;
    node.depth = depth;
    node.box = Box::of(points_, std::span<const VertexId>(order_).subspan(begin, end - begin));
  }
  if (end - begin == 1) {
    leaf_of_[order_[begin]] = id;
    return id;
  }

  const Box box = nodes_[id].box;
  const std::size_t axis = box.longest_axis();
  double cut = (box.lo[axis] + box.hi[axis]) / 2.0;
  auto first = order_.begin() + static_cast<std::ptrdiff_t>(begin);
  auto last = order_.begin() + static_cast<std::ptrdiff_t>(end);
  auto on_left = [&](VertexId v) { return coordinate(points_[v], axis) <= cut; };
  auto mid = std::stable_partition(first, last, on_left);
  if (mid == last) {
    // The midpoint rounded onto the upper boundary; cut just below it.
    cut = std::nextafter(box.hi[axis], box.lo[axis]);
    mid = std::stable_partition(first, last, on_left);
  }
  const auto split = static_cast<std::size_t>(mid - order_.begin());

  nodes_[id].cut_axis = axis;
  nodes_[id].cut_value = cut;
  const std::size_t left = build(begin, split, id, depth + 1);
  const std::size_t right = build(split, end, id, depth + 1);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

std::span<const VertexId> SplitTree::subset(std::size_t id) const {
  const SplitNode& n = nodes_.at(id);
  return std::span<const VertexId>(order_).subspan(n.begin, n.end - n.begin);
}

bool SplitTree::contains(std::size_t id, VertexId point) const {
  const SplitNode& n = nodes_.at(id);
  const std::size_t pos = position_.at(point);
  return pos >= n.begin && pos < n.end;
}

Separation well_separated(const Box& a, const Box& b, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("separation factor must be positive");
  const double r = std::max(a.half_diagonal(), b.half_diagonal());
  const auto ca = a.center();
  const auto cb = b.center();
  double sum = 0.0;
  for (std::size_t k = 0; k < kDim; ++k) sum += (ca[k] - cb[k]) * (ca[k] - cb[k]);
  const double gap = std::sqrt(sum) - 2.0 * r;
  return {gap >= s * r, r};
}

VertexId lowest_index_representative(const SplitTree& tree, std::size_t node) {
  const auto sub = tree.subset(node);
  return *std::min_element(sub.begin(), sub.end());
}

VertexId center_nearest_representative(const SplitTree& tree, std::size_t node) {
  const auto c = tree.node(node).box.center();
  const Point center{c[0], c[1]};
  VertexId best = tree.subset(node).front();
  for (VertexId v : tree.subset(node)) {
    if (dist_sq(tree.points()[v], center) < dist_sq(tree.points()[best], center)) best = v;
  }
  return best;
}

Wspd::Wspd(SplitTree tree, double s, std::vector<WsPair> pairs)
    : tree_(std::move(tree)), s_(s), pairs_(std::move(pairs)),
      pairs_of_node_(tree_.nodes().size()) {
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    pairs_of_node_.at(pairs_[k].node_a).push_back(k);
    pairs_of_node_.at(pairs_[k].node_b).push_back(k);
  }
}

PairLookup Wspd::find_pair(VertexId p, VertexId q) const {
  if (p == q) throw std::invalid_argument("a point is not separated from itself");
  for (std::size_t node = tree_.leaf_of(p); node != SplitNode::none;
       node = tree_.node(node).parent) {
    for (std::size_t k : pairs_of_node_[node]) {
      const WsPair& pair = pairs_[k];
      const bool p_in_a = pair.node_a == node;
      const std::size_t other = p_in_a ? pair.node_b : pair.node_a;
      if (tree_.contains(other, q)) return {k, p_in_a};
    }
  }
  throw std::logic_error("no well-separated pair covers points " + std::to_string(p) + " and " +
                         std::to_string(q));
}

namespace {

struct PairFinder {
  const SplitTree& tree;
  double s;
  const RepresentativePolicy& policy;
  std::vector<WsPair>& out;

  void find_pairs(std::size_t v, std::size_t w) {
    const SplitNode& nv = tree.node(v);
    const SplitNode& nw = tree.node(w);
    const Separation sep = well_separated(nv.box, nw.box, s);
    if (sep.separated) {
      out.push_back({v, w, policy(tree, v), policy(tree, w), sep.radius, s});
      return;
    }
    if (nv.box.longest_side() > nw.box.longest_side()) {
      find_pairs(nv.left, w);
      find_pairs(nv.right, w);
    } else {
      find_pairs(v, nw.left);
      find_pairs(v, nw.right);
    }
  }
};

}  // namespace

Wspd compute_wspd(const SplitTree& tree, double s, const RepresentativePolicy& policy) {
  if (!(s > 0.0)) throw std::invalid_argument("separation factor must be positive");
  std::vector<WsPair> pairs;
  PairFinder finder{tree, s, policy, pairs};
  for (std::size_t id = 0; id < tree.nodes().size(); ++id) {
    const SplitNode& node = tree.node(id);
    if (!node.is_leaf()) finder.find_pairs(node.left, node.right);
  }
  return Wspd(tree, s, std::move(pairs));
}

}  // namespace hfspan
