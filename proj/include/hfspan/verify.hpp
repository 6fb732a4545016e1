#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfspan/graph.hpp"

namespace hfspan {

/// Dilation bounds implied by stretch t.
struct BoundSet {
  double t = 1.0;
  /// sqrt(t^2 - 1) / 2
  double hausdorff_bound = 0.0;
  /// min(t / 2, sqrt(t^2 - t) / sqrt(2))
  double frechet_bound = 0.0;
  /// (t - 1) / (2t + 2), for the WSPD construction with s = (4t+4)/(t-1).
  double wspd_frechet_bound = 0.0;
};

/// Throws std::domain_error for t < 1 or non-finite t.
BoundSet bounds_for_t(double t);

enum class EpsilonRegime { general, wspd };

/// Smallest t whose Frechet bound equals eps. In the general regime this
/// inverts min(t/2, sqrt(t^2-t)/sqrt(2)): (1 + sqrt(1 + 8 eps^2)) / 2 for
/// eps <= 1 and 2 eps above. In the wspd regime it is (1 + 2 eps)/(1 - 2 eps)
/// and eps must be below 1/2. Throws std::domain_error outside the domain.
double t_for_epsilon(double eps, EpsilonRegime regime);

enum class DilationKind { stretch, hausdorff, frechet };
enum class SweepMode { exhaustive, sampled };

std::string to_string(DilationKind kind);
std::string to_string(SweepMode mode);

struct PairRatio {
  VertexId u = 0;
  VertexId v = 0;
  double ratio = 0.0;
};

struct DilationReport {
  DilationKind kind = DilationKind::stretch;
  /// +infinity when some checked pair is disconnected.
  double max_ratio = 0.0;
  VertexId witness_u = 0;
  VertexId witness_v = 0;
  /// Shortest path of the witness pair; empty when it is unreachable or
  /// the graph has fewer than two vertices.
  std::optional<PathResult> witness_path;
  /// Segment-to-path distance of the witness over d(u,v), sampled with
  /// relative spacing max(tolerance, 1e-4). Only filled for symmetric
  /// Hausdorff reports.
  std::optional<double> witness_segment_to_path;
  /// Every checked pair with u < v, sorted; only when requested.
  std::vector<PairRatio> per_pair;
  double tolerance = 0.0;
  SweepMode mode = SweepMode::exhaustive;
  std::size_t pairs_checked = 0;
  std::size_t unreachable_pairs = 0;
  bool symmetric = false;
  std::optional<double> bound;
  /// max_ratio <= bound + tolerance; true when no bound was supplied.
  bool passed = true;
};

/// Exhaustive-sweep vertex cap: SPANNER_MAX_N if set to a positive
/// integer, otherwise 2000.
std::size_t default_max_exhaustive_n();

struct SweepOptions {
  /// Absolute slack on ratios; also sets the metric tolerance to
  /// tolerance * d(u,v) for every pair.
  double tolerance = 1e-9;
  /// Hausdorff only: report the symmetric distance.
  bool symmetric = false;
  bool keep_pairs = false;
  std::size_t max_exhaustive_n = default_max_exhaustive_n();
  /// Pairs drawn when the graph exceeds max_exhaustive_n or when
  /// force_sampled is set.
  std::size_t sample_size = 10000;
  bool force_sampled = false;
  std::uint64_t seed = 42;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Stretch sweep; passes iff the largest stretch is at most t + tolerance.
DilationReport verify_t_spanner(const GeoGraph& g, double t, const SweepOptions& opts = {});

/// Largest d_H(SP(u,v), uv) / d(u,v) over pairs, SP being the shortest-path
/// tree path from the smaller index. The path-to-segment direction is exact.
/// When the path joins the segment's endpoints every point of the segment
/// is the projection of some path point, so the segment-to-path direction
/// never exceeds it and the symmetric value equals the one-sided one.
DilationReport hausdorff_dilation(const GeoGraph& g, const SweepOptions& opts = {});

/// Largest continuous Frechet distance between SP(u,v) and uv, over d(u,v).
DilationReport frechet_dilation(const GeoGraph& g, const SweepOptions& opts = {});

/// Sets report.bound and recomputes report.passed.
void apply_bound(DilationReport& report, double bound);

struct HausdorffPathQuery {
  bool exists = false;
  /// Shortest path inside the tube, when one exists.
  std::optional<PathResult> path;
};

/// Whether some u-v path stays within eps * d(u,v) of segment uv. Distance
/// to a segment is convex along an edge, so an edge lies in the tube iff
/// both endpoints do; existence is reachability over those edges. The tube
/// radius gets tol * d(u,v) of slack. Throws std::invalid_argument if u == v.
HausdorffPathQuery hausdorff_path_exists(const GeoGraph& g, VertexId u, VertexId v, double eps,
                                         double tol = 1e-9);

}  // namespace hfspan
