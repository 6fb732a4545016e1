#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "hfspan/graph.hpp"

namespace hfspan {

inline constexpr int kDefaultKochMaxGeneration = 8;

/// The n-th Koch graph: a single path from (0,0) to (1,0) with 4^n edges of
/// length 3^-n. Vertex indices follow the path order.
class KochGraph {
 public:
  KochGraph(GeoGraph graph, std::vector<int> levels, int generation);

  const GeoGraph& graph() const { return graph_; }
  int generation() const { return generation_; }
  std::span<const int> levels() const { return levels_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  const Point& point(VertexId v) const { return graph_.point(v); }

  /// Index distance between consecutive vertices of F_i inside F_n.
  std::size_t stride(int i) const;

 private:
  GeoGraph graph_;
  std::vector<int> levels_;
  int generation_;
};

/// Builds F_n by subdividing every edge of F_{n-1} into thirds and raising
/// an equilateral bump on the left of the directed edge (upwards for F_1).
/// Throws std::invalid_argument when n < 0 or n > max_generation.
KochGraph koch_graph(int n, int max_generation = kDefaultKochMaxGeneration);

/// Generation at which the vertex first appears.
int vertex_level(const KochGraph& k, VertexId v);

/// Smallest i such that at least two levels in the sequence are <= i, i.e.
/// the second smallest entry. Needs at least two entries.
int pair_level_of_sequence(std::span<const int> levels);

/// pair_level_of_sequence over the path between u and v, endpoints included.
int pair_level(const KochGraph& k, VertexId u, VertexId v);

enum class TurnCase {
  sixty,      // bump apex: v1 v2 v3 form an equilateral triangle
  two_forty,  // left turn of 60 degrees; 240 degrees on the outer side
};

/// Classifies three consecutive vertices of some F_i. Throws
/// std::invalid_argument if the edges differ in length or the turn is
/// neither case.
TurnCase classify_turn(const Point& v1, const Point& v2, const Point& v3);

struct BoundingRect {
  /// Counter-clockwise or clockwise corner cycle.
  std::array<Point, 4> corners;
  Point v1, v2, v3;
  TurnCase turn = TurnCase::sixty;

  double diagonal() const;
  /// Inclusion with an absolute slack.
  bool contains(const Point& p, double slack) const;
};

/// Rectangle enclosing the Koch subpath between v1 and v3. In the 240-degree
/// case v1v3 is a diagonal and the long side runs along v1v2 when
/// level1 < level3, along v2v3 otherwise. In the 60-degree case v1v3 is a
/// side and v2 lies on the opposite side.
BoundingRect bounding_rectangle(const Point& v1, const Point& v2, const Point& v3, int level1,
                                int level3);

struct KochPairBounds {
  int level = 0;
  /// sqrt(3) / 3^(i-1): upper bound on d_H(P(u,v), uv).
  double hausdorff_upper = 0.0;
  /// sqrt(3) / (2 3^i): lower bound on d(u,v).
  double distance_lower = 0.0;
};

KochPairBounds koch_bounds_for_level(int level);
KochPairBounds koch_pair_bounds(const KochGraph& k, VertexId u, VertexId v);

struct KochEdgeViolation {
  VertexId u = 0;
  VertexId v = 0;
};

/// Edges where neither endpoint has level n. Empty for a valid F_n.
std::vector<KochEdgeViolation> edges_missing_top_level(const KochGraph& k);

struct ThreeBetweenViolation {
  int generation = 0;
  VertexId first = 0;
  VertexId second = 0;
  std::size_t count = 0;
};

/// For every 1 <= i <= n and every pair adjacent in F_{i-1}, counts the
/// level-i vertices strictly between them; reports counts other than 3.
std::vector<ThreeBetweenViolation> three_between_violations(const KochGraph& k);

struct RectangleCheck {
  std::size_t triples = 0;
  std::size_t equal_level_triples = 0;
  std::size_t containment_violations = 0;
  std::size_t shape_violations = 0;
  double max_diagonal_ratio = 0.0;  // diagonal / (sqrt(3) 3^-i)
};

/// For every generation 1..max_generation (capped at n) and every
/// consecutive triple of F_i, checks that the F_n subpath between v1 and v3
/// lies in the bounding rectangle and that the rectangle has the expected
/// shape.
RectangleCheck check_bounding_rectangles(const KochGraph& k, int max_generation,
                                         double slack = 1e-9);

struct KochLemmaViolation {
  VertexId u = 0;
  VertexId v = 0;
  int level = 0;
  double measured = 0.0;
  double bound = 0.0;
};

struct KochLemmaReport {
  int generation = 0;
  std::size_t pairs_checked = 0;
  double slack = 0.0;
  /// max over pairs of d_H(P(u,v), uv) / d(u,v).
  double max_hausdorff_ratio = 0.0;
  VertexId ratio_witness_u = 0;
  VertexId ratio_witness_v = 0;
  /// max over pairs of d_H / (sqrt(3) / 3^(i-1)).
  double max_upper_bound_use = 0.0;
  /// min over pairs of d(u,v) / (sqrt(3) / (2 3^i)).
  double min_lower_bound_margin = 0.0;
  std::size_t hausdorff_violation_count = 0;
  /// Upper-bound violations at pair level < 2 are counted apart for review.
  std::size_t hausdorff_flagged_count = 0;
  std::size_t distance_violation_count = 0;
  /// First few offenders of each kind.
  std::vector<KochLemmaViolation> hausdorff_violations;
  std::vector<KochLemmaViolation> hausdorff_flagged;
  std::vector<KochLemmaViolation> distance_violations;

  bool passed() const { return hausdorff_violation_count == 0 && distance_violation_count == 0; }
};

/// All-pairs check of both level bounds and of the resulting ratio bound.
KochLemmaReport koch_lemma_sweep(const KochGraph& k, double slack = 1e-9);

}  // namespace hfspan
