#pragma once

#include <cstddef>
#include <vector>

#include "hfspan/graph.hpp"
#include "hfspan/split_tree.hpp"

namespace hfspan {

/// Classic path-greedy spanner: pairs in order of increasing distance (ties
/// by index pair), an edge is added iff the current graph distance exceeds
/// t times the Euclidean distance. Throws std::domain_error for t < 1.
GeoGraph path_greedy_spanner(std::vector<Point> points, double t);

/// Separation factor that makes the WSPD spanner a t-spanner: (4t+4)/(t-1).
double separation_for_stretch(double t);

struct WspdSpanner {
  Wspd wspd;
  GeoGraph graph;
};

/// One edge per well-separated pair, between the pair's representatives.
GeoGraph spanner_from_wspd(const Wspd& wspd);

WspdSpanner build_wspd_spanner(std::vector<Point> points, double s,
                               const RepresentativePolicy& policy = lowest_index_representative);

GeoGraph wspd_spanner(std::vector<Point> points, double s,
                      const RepresentativePolicy& policy = lowest_index_representative);

/// Path from p to q built by the recursive pair construction: reach the
/// representative of p's side inside that side's subset, cross the pair
/// edge, then reach q inside the other subset.
struct WspdPath {
  PathResult path;
  /// Pair separating p and q.
  std::size_t pair = 0;
  /// Position in path.vertex_indices of the first endpoint of the pair edge.
  std::size_t bridge = 0;
  /// Whether p lies in the pair's node_a.
  bool p_in_a = true;
};

WspdPath wspd_path(const Wspd& wspd, const GeoGraph& g, VertexId p, VertexId q);

struct FrechetCertificate {
  VertexId u = 0;
  VertexId v = 0;
  WspdPath path;
  double frechet = 0.0;
  double pair_radius = 0.0;
  /// Twice the covering pair's radius.
  double diameter_bound = 0.0;
  /// (2 / s) d(u, v).
  double separation_bound = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Frechet distance between the recursive WSPD path and segment uv, checked
/// against both 2r and (2/s) d(u,v).
FrechetCertificate wspd_frechet_certificate(const Wspd& wspd, const GeoGraph& g, VertexId u,
                                            VertexId v, double tol = 1e-9);

struct CertificateSweep {
  std::size_t pairs_checked = 0;
  /// Largest d_F / d(u,v) seen.
  double max_ratio = 0.0;
  VertexId witness_u = 0;
  VertexId witness_v = 0;
  std::vector<FrechetCertificate> violations;
};

CertificateSweep certify_all_pairs(const Wspd& wspd, const GeoGraph& g, double tol = 1e-9);

}  // namespace hfspan
