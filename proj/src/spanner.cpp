#include "hfspan/spanner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "hfspan/metrics.hpp"

namespace hfspan {

GeoGraph path_greedy_spanner(std::vector<Point> points, double t) {
  if (!(t >= 1.0)) throw std::domain_error("stretch factor must be >= 1, got " + std::to_string(t));
  GeoGraph g(std::move(points));
  const std::size_t n = g.vertex_count();

  struct Candidate {
    double d;
    VertexId u;
    VertexId v;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) candidates.push_back({dist(g.point(u), g.point(v)), u, v});
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.d, a.u, a.v) < std::tie(b.d, b.u, b.v);
  });

  for (const Candidate& c : candidates) {
    const double budget = t * c.d;
    const ShortestPathTree tree = shortest_path_tree(g, c.u, budget);
    if (!(tree.distance[c.v] <= budget)) g.add_edge(c.u, c.v);
  }
  return g;
}

double separation_for_stretch(double t) {
  if (!(t > 1.0)) throw std::domain_error("separation needs t > 1, got " + std::to_string(t));
  return (4.0 * t + 4.0) / (t - 1.0);
}

GeoGraph spanner_from_wspd(const Wspd& wspd) {
  const auto pts = wspd.tree().points();
  GeoGraph g(std::vector<Point>(pts.begin(), pts.end()));
  for (const WsPair& pair : wspd.pairs()) g.add_edge(pair.rep_a, pair.rep_b);
  return g;
}

WspdSpanner build_wspd_spanner(std::vector<Point> points, double s,
                               const RepresentativePolicy& policy) {
  SplitTree tree(std::move(points));
  Wspd wspd = compute_wspd(tree, s, policy);
  GeoGraph graph = spanner_from_wspd(wspd);
  return {std::move(wspd), std::move(graph)};
}

GeoGraph wspd_spanner(std::vector<Point> points, double s, const RepresentativePolicy& policy) {
  return build_wspd_spanner(std::move(points), s, policy).graph;
}

namespace {

void append_recursive_path(const Wspd& wspd, VertexId p, VertexId q, std::vector<VertexId>& out) {
  if (p == q) {
    out.push_back(p);
    return;
  }
  const PairLookup hit = wspd.find_pair(p, q);
  const WsPair& pair = wspd.pairs()[hit.pair];
  const VertexId near = hit.first_in_a ? pair.rep_a : pair.rep_b;
  const VertexId far = hit.first_in_a ? pair.rep_b : pair.rep_a;
  append_recursive_path(wspd, p, near, out);
  append_recursive_path(wspd, far, q, out);
}

}  // namespace

WspdPath wspd_path(const Wspd& wspd, const GeoGraph& g, VertexId p, VertexId q) {
  if (g.vertex_count() != wspd.tree().points().size()) {
    throw std::invalid_argument("graph and WSPD are over different point sets");
  }
  WspdPath result{make_path(g, {p}), 0, 0, true};
  if (p == q) return result;

  const PairLookup hit = wspd.find_pair(p, q);
  const WsPair& pair = wspd.pairs()[hit.pair];
  const VertexId near = hit.first_in_a ? pair.rep_a : pair.rep_b;
  const VertexId far = hit.first_in_a ? pair.rep_b : pair.rep_a;

  std::vector<VertexId> vertices;
  append_recursive_path(wspd, p, near, vertices);
  const std::size_t bridge = vertices.size() - 1;
  append_recursive_path(wspd, far, q, vertices);

  result.path = make_path(g, std::move(vertices));
  result.pair = hit.pair;
  result.bridge = bridge;
  result.p_in_a = hit.first_in_a;
  return result;
}

FrechetCertificate wspd_frechet_certificate(const Wspd& wspd, const GeoGraph& g, VertexId u,
                                            VertexId v, double tol) {
  if (u == v) throw std::invalid_argument("certificate needs two distinct vertices");
  FrechetCertificate cert{u, v, wspd_path(wspd, g, u, v)};
  cert.tolerance = tol;
  const Segment uv{g.point(u), g.point(v)};
  cert.frechet = frechet_polyline_segment(cert.path.path.polyline, uv, tol).distance;
  cert.pair_radius = wspd.pairs()[cert.path.pair].radius;
  cert.diameter_bound = 2.0 * cert.pair_radius;
  cert.separation_bound = 2.0 / wspd.s() * uv.length();
  cert.passed = cert.frechet <= cert.diameter_bound + tol && cert.frechet <= cert.separation_bound + tol;
  return cert;
}

CertificateSweep certify_all_pairs(const Wspd& wspd, const GeoGraph& g, double tol) {
  CertificateSweep sweep;
  sweep.max_ratio = -1.0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      FrechetCertificate cert = wspd_frechet_certificate(wspd, g, u, v, tol);
      const double ratio = cert.frechet / dist(g.point(u), g.point(v));
      ++sweep.pairs_checked;
      if (ratio > sweep.max_ratio) {
        sweep.max_ratio = ratio;
        sweep.witness_u = u;
        sweep.witness_v = v;
      }
      if (!cert.passed) sweep.violations.push_back(std::move(cert));
    }
  }
  if (sweep.pairs_checked == 0) sweep.max_ratio = 0.0;
  return sweep;
}

}  // namespace hfspan
