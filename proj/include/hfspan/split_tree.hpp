#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hfspan/geometry.hpp"
#include "hfspan/graph.hpp"

namespace hfspan {

inline constexpr std::size_t kDim = 2;

double coordinate(const Point& p, std::size_t axis);

/// Axis-aligned bounding box.
struct Box {
  std::array<double, kDim> lo{};
  std::array<double, kDim> hi{};

  static Box of(std::span<const Point> points, std::span<const VertexId> subset);

  double side(std::size_t axis) const { return hi[axis] - lo[axis]; }
  double longest_side() const;
  /// Smallest axis index among the longest sides.
  std::size_t longest_axis() const;
  std::array<double, kDim> center() const;
  double half_diagonal() const;
  bool contains(const Point& p) const;
};

struct SplitNode {
  Box box;
  /// Range into SplitTree::order(); a node's points are contiguous there.
  std::size_t begin = 0;
  std::size_t end = 0;
  static constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::size_t left = none;
  std::size_t right = none;
  std::size_t parent = none;
  std::size_t depth = 0;
  /// Axis and coordinate of the cut, for internal nodes.
  std::size_t cut_axis = 0;
  double cut_value = 0.0;

  bool is_leaf() const { return left == none; }
  std::size_t size() const { return end - begin; }
};

/// Binary tree that halves the bounding box of its point subset across the
/// longest side until single points remain. Points lying exactly on a cut go
/// to the left child. Node 0 is the root.
class SplitTree {
 public:
  /// Throws std::invalid_argument for an empty set or duplicate points.
  explicit SplitTree(std::vector<Point> points);

  std::span<const SplitNode> nodes() const { return nodes_; }
  const SplitNode& node(std::size_t id) const { return nodes_.at(id); }
  std::span<const Point> points() const { return points_; }
  std::span<const VertexId> order() const { return order_; }

  /// Point indices held by `id`, ascending.
  std::span<const VertexId> subset(std::size_t id) const;
  bool contains(std::size_t id, VertexId point) const;
  std::size_t leaf_of(VertexId point) const { return leaf_of_.at(point); }

 private:
  std::size_t build(std::size_t begin, std::size_t end, std::size_t parent, std::size_t depth);

  std::vector<Point> points_;
  std::vector<VertexId> order_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> leaf_of_;
  std::vector<SplitNode> nodes_;
};

struct Separation {
  bool separated = false;
  /// Common radius of the two balls centred on the box centres.
  double radius = 0.0;
};

/// Balls of radius r = max half-diagonal around each box centre; the boxes
/// are well separated iff the gap between the balls is at least s r.
Separation well_separated(const Box& a, const Box& b, double s);

struct WsPair {
  std::size_t node_a = 0;
  std::size_t node_b = 0;
  VertexId rep_a = 0;
  VertexId rep_b = 0;
  double radius = 0.0;
  double separation = 0.0;
};

/// Picks a representative point for a split-tree node.
using RepresentativePolicy = std::function<VertexId(const SplitTree&, std::size_t node)>;

VertexId lowest_index_representative(const SplitTree& tree, std::size_t node);
VertexId center_nearest_representative(const SplitTree& tree, std::size_t node);

struct PairLookup {
  std::size_t pair = 0;
  /// True when the first queried point lies in node_a.
  bool first_in_a = true;
};

class Wspd {
 public:
  Wspd(SplitTree tree, double s, std::vector<WsPair> pairs);

  const SplitTree& tree() const { return tree_; }
  double s() const { return s_; }
  std::span<const WsPair> pairs() const { return pairs_; }

  /// The unique pair separating p and q (p != q).
  PairLookup find_pair(VertexId p, VertexId q) const;

 private:
  SplitTree tree_;
  double s_;
  std::vector<WsPair> pairs_;
  std::vector<std::vector<std::size_t>> pairs_of_node_;
};

/// Runs FindPairs on the children of every internal node. When neither box
/// is well separated from the other, the node whose box has the longer
/// longest side is split; ties split the second argument.
Wspd compute_wspd(const SplitTree& tree, double s,
                  const RepresentativePolicy& policy = lowest_index_representative);

}  // namespace hfspan
