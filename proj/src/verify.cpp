#include "hfspan/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "hfspan/metrics.hpp"
#include "hfspan/random.hpp"

namespace hfspan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Relative sample spacing for the witness's segment-to-path distance.
constexpr double kWitnessSampling = 1e-4;

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

struct SourceResult {
  double best = -1.0;
  VertexId best_v = 0;
  std::size_t checked = 0;
  std::size_t unreachable = 0;
  std::vector<PairRatio> pairs;

  void record(VertexId u, VertexId v, double ratio, bool keep) {
    ++checked;
    if (ratio > best || (ratio == best && v < best_v)) {
      best = ratio;
      best_v = v;
    }
    if (keep) pairs.push_back({u, v, ratio});
  }
};

/// Targets per source (each v > u). Empty optional means every v > u.
std::optional<std::vector<std::vector<VertexId>>> sample_targets(std::size_t n,
                                                                  const SweepOptions& opts) {
  const std::size_t total = n < 2 ? 0 : n * (n - 1) / 2;
  const bool sample = opts.force_sampled || n > opts.max_exhaustive_n;
  if (!sample || opts.sample_size >= total) return std::nullopt;
  Rng rng(opts.seed);
  std::set<std::pair<VertexId, VertexId>> chosen;
  while (chosen.size() < opts.sample_size) {
    VertexId a = rng.index(n);
    VertexId b = rng.index(n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    chosen.emplace(a, b);
  }
  std::vector<std::vector<VertexId>> targets(n);
  for (const auto& [a, b] : chosen) targets[a].push_back(b);
  return targets;
}

DilationReport sweep(const GeoGraph& g, DilationKind kind, const SweepOptions& opts) {
  const std::size_t n = g.vertex_count();
  DilationReport report;
  report.kind = kind;
  report.tolerance = opts.tolerance;
  report.symmetric = kind == DilationKind::hausdorff && opts.symmetric;

  const auto targets = sample_targets(n, opts);
  report.mode = targets ? SweepMode::sampled : SweepMode::exhaustive;
  if (n < 2) return report;

  std::vector<SourceResult> results(n);
  parallel_for(n, opts.threads, [&](std::size_t source) {
    const VertexId u = source;
    SourceResult& out = results[u];
    std::vector<char> wanted(n, 0);
    std::size_t wanted_count = 0;
    if (targets) {
      for (VertexId v : (*targets)[u]) wanted[v] = 1;
      wanted_count = (*targets)[u].size();
    } else {
      for (VertexId v = u + 1; v < n; ++v) wanted[v] = 1;
      wanted_count = n - u - 1;
    }
    if (wanted_count == 0) return;

    const ShortestPathTree tree = shortest_path_tree(g, u);
    const Point& pu = g.point(u);
    for (VertexId v = 0; v < n; ++v) {
      if (wanted[v] && !tree.reachable(v)) {
        ++out.unreachable;
        out.record(u, v, kInf, opts.keep_pairs);
      }
    }

    if (kind == DilationKind::stretch) {
      for (VertexId v = 0; v < n; ++v) {
        if (wanted[v] && tree.reachable(v)) {
          out.record(u, v, tree.distance[v] / dist(pu, g.point(v)), opts.keep_pairs);
        }
      }
    } else {
      // Children lists in index order, restricted to subtrees holding a target.
      std::vector<VertexId> by_distance;
      for (VertexId v = 0; v < n; ++v) {
        if (tree.reachable(v)) by_distance.push_back(v);
      }
      std::sort(by_distance.begin(), by_distance.end(), [&](VertexId a, VertexId b) {
        return tree.distance[a] > tree.distance[b];
      });
      std::vector<char> needed(wanted);
      for (VertexId v : by_distance) {
        const VertexId up = tree.predecessor[v];
        if (needed[v] && up != ShortestPathTree::npos) needed[up] = 1;
      }
      std::vector<std::vector<VertexId>> children(n);
      for (VertexId v = 0; v < n; ++v) {
        const VertexId up = tree.predecessor[v];
        if (needed[v] && up != ShortestPathTree::npos) children[up].push_back(v);
      }
      PathHullStack stack;
      std::vector<std::pair<VertexId, std::size_t>> dfs{{u, 0}};
      stack.push(pu);
      while (!dfs.empty()) {
        auto& [node, next] = dfs.back();
        if (next < children[node].size()) {
          const VertexId child = children[node][next++];
          stack.push(g.point(child));
          dfs.emplace_back(child, 0);
          if (wanted[child]) {
            const Segment uv{pu, g.point(child)};
            const double d = uv.length();
            double value;
            if (kind == DilationKind::hausdorff) {
              value = stack.farthest_distance(uv);
            } else {
              value = frechet_polyline_segment(stack.points(), uv, opts.tolerance * d).distance;
            }
            out.record(u, child, value / d, opts.keep_pairs);
          }
        } else {
          dfs.pop_back();
          stack.pop();
        }
      }
    }
    if (opts.keep_pairs) {
      std::sort(out.pairs.begin(), out.pairs.end(),
                [](const PairRatio& a, const PairRatio& b) { return a.v < b.v; });
    }
  });

  bool found = false;
  for (VertexId u = 0; u < n; ++u) {
    SourceResult& r = results[u];
    report.pairs_checked += r.checked;
    report.unreachable_pairs += r.unreachable;
    if (r.checked > 0 && (!found || r.best > report.max_ratio)) {
      found = true;
      report.max_ratio = r.best;
      report.witness_u = u;
      report.witness_v = r.best_v;
    }
    if (opts.keep_pairs) {
      report.per_pair.insert(report.per_pair.end(), r.pairs.begin(), r.pairs.end());
    }
  }

  if (found && std::isfinite(report.max_ratio)) {
    const ShortestPathTree tree = shortest_path_tree(g, report.witness_u);
    report.witness_path = make_path(g, tree.path_to(report.witness_v));
    if (report.symmetric) {
      const Segment uv{g.point(report.witness_u), g.point(report.witness_v)};
      const double d = uv.length();
      const HausdorffResult h =
          hausdorff(report.witness_path->polyline, uv, std::max(opts.tolerance, kWitnessSampling) * d);
      report.witness_segment_to_path = h.directed_segment_to_path / d;
    }
  }
  return report;
}

}  // namespace

BoundSet bounds_for_t(double t) {
  if (!std::isfinite(t) || t < 1.0) throw std::domain_error("stretch factor t must be >= 1");
  BoundSet b;
  b.t = t;
  b.hausdorff_bound = std::sqrt(t * t - 1.0) / 2.0;
  b.frechet_bound = std::min(t / 2.0, std::sqrt(t * t - t) / std::sqrt(2.0));
  b.wspd_frechet_bound = (t - 1.0) / (2.0 * t + 2.0);
  return b;
}

double t_for_epsilon(double eps, EpsilonRegime regime) {
  if (!std::isfinite(eps) || eps <= 0.0) throw std::domain_error("epsilon must be positive");
  if (regime == EpsilonRegime::wspd) {
    if (eps >= 0.5) throw std::domain_error("wspd regime needs epsilon in (0, 0.5)");
    return (1.0 + 2.0 * eps) / (1.0 - 2.0 * eps);
  }
  if (eps <= 1.0) return (1.0 + std::sqrt(1.0 + 8.0 * eps * eps)) / 2.0;
  return 2.0 * eps;
}

std::string to_string(DilationKind kind) {
  switch (kind) {
    case DilationKind::stretch: return "stretch";
    case DilationKind::hausdorff: return "hausdorff";
    case DilationKind::frechet: return "frechet";
  }
  return "unknown";
}

std::string to_string(SweepMode mode) {
  return mode == SweepMode::exhaustive ? "exhaustive" : "sampled";
}

std::size_t default_max_exhaustive_n() {
  constexpr std::size_t kDefault = 2000;
  const char* env = std::getenv("SPANNER_MAX_N");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (*end != '\0' || value == 0) return kDefault;
  return static_cast<std::size_t>(value);
}

void apply_bound(DilationReport& report, double bound) {
  report.bound = bound;
  report.passed = report.max_ratio <= bound + report.tolerance;
}

DilationReport verify_t_spanner(const GeoGraph& g, double t, const SweepOptions& opts) {
  DilationReport report = sweep(g, DilationKind::stretch, opts);
  apply_bound(report, t);
  return report;
}

DilationReport hausdorff_dilation(const GeoGraph& g, const SweepOptions& opts) {
  return sweep(g, DilationKind::hausdorff, opts);
}

DilationReport frechet_dilation(const GeoGraph& g, const SweepOptions& opts) {
  return sweep(g, DilationKind::frechet, opts);
}

HausdorffPathQuery hausdorff_path_exists(const GeoGraph& g, VertexId u, VertexId v, double eps,
                                         double tol) {
  if (u == v) throw std::invalid_argument("hausdorff path needs two distinct vertices");
  const Segment uv{g.point(u), g.point(v)};
  const double radius = (eps + tol) * uv.length();
  std::vector<char> inside(g.vertex_count());
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    inside[w] = point_segment_distance(g.point(w), uv) <= radius;
  }
  GeoGraph tube(std::vector<Point>(g.points().begin(), g.points().end()));
  for (const Edge& e : g.edges()) {
    if (inside[e.u] && inside[e.v]) tube.add_edge(e.u, e.v);
  }
  HausdorffPathQuery result;
  result.path = shortest_path(tube, u, v);
  result.exists = result.path.has_value();
  return result;
}

}  // namespace hfspan
