#include "hfspan/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hfspan {

namespace {

Json ratio_json(double value) {
  return std::isfinite(value) ? Json(value) : Json(nullptr);
}

double parse_double(const std::string& text, std::size_t line) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw std::invalid_argument("line " + std::to_string(line) + ": '" + text +
                                "' is not a number");
  }
  return value;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Json graph_to_json(const GeoGraph& g, const Json& metadata) {
  Json j;
  Json vertices = Json::array();
  for (const Point& p : g.points()) vertices.push_back({p.x, p.y});
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  if (!metadata.is_null()) j["metadata"] = metadata;
  return j;
}

GeoGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
  }
  const Json& vs = j.at("vertices");
  const Json& es = j.at("edges");
  if (!vs.is_array() || !es.is_array()) {
    throw std::invalid_argument("\"vertices\" and \"edges\" must be arrays");
  }
  std::vector<Point> points;
  points.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Json& v = vs[i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw std::invalid_argument("vertex " + std::to_string(i) + " must be [x, y]");
    }
    points.emplace_back(v[0].get<double>(), v[1].get<double>());
  }
  GeoGraph g(std::move(points));
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Json& e = es[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw std::invalid_argument("edge " + std::to_string(i) + " must be [i, j]");
    }
    try {
      g.add_edge(e[0].get<VertexId>(), e[1].get<VertexId>());
    } catch (const std::exception& ex) {
      throw std::invalid_argument("edge " + std::to_string(i) + ": " + ex.what());
    }
  }
  return g;
}

Json wspd_to_json(const Wspd& wspd) {
  Json j;
  j["s"] = wspd.s();
  Json pairs = Json::array();
  for (const WsPair& p : wspd.pairs()) {
    const auto a = wspd.tree().subset(p.node_a);
    const auto b = wspd.tree().subset(p.node_b);
    Json entry;
    entry["a"] = std::vector<VertexId>(a.begin(), a.end());
    entry["b"] = std::vector<VertexId>(b.begin(), b.end());
    entry["rep_a"] = p.rep_a;
    entry["rep_b"] = p.rep_b;
    entry["r"] = p.radius;
    pairs.push_back(std::move(entry));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json report_to_json(const DilationReport& report) {
  Json j;
  j["kind"] = to_string(report.kind);
  j["max_ratio"] = ratio_json(report.max_ratio);
  if (!std::isfinite(report.max_ratio)) j["unreachable"] = true;
  j["witness"] = {report.witness_u, report.witness_v};
  if (report.witness_path) j["witness_path"] = report.witness_path->vertex_indices;
  if (report.witness_segment_to_path) {
    j["witness_segment_to_path"] = *report.witness_segment_to_path;
  }
  j["symmetric"] = report.symmetric;
  j["bound"] = report.bound ? Json(*report.bound) : Json(nullptr);
  j["pass"] = report.passed;
  j["tolerance"] = report.tolerance;
  j["mode"] = to_string(report.mode);
  j["pairs_checked"] = report.pairs_checked;
  j["unreachable_pairs"] = report.unreachable_pairs;
  if (!report.per_pair.empty()) {
    Json rows = Json::array();
    for (const PairRatio& p : report.per_pair) rows.push_back({p.u, p.v, ratio_json(p.ratio)});
    j["per_pair"] = std::move(rows);
  }
  return j;
}

Json koch_report_to_json(const KochGraph& k, const KochLemmaReport& lemmas,
                         const RectangleCheck& rectangles, std::size_t edge_violations,
                         std::size_t three_between_violations) {
  Json j;
  j["generation"] = k.generation();
  j["vertices"] = k.vertex_count();
  Json obs;
  obs["edges_missing_top_level"] = edge_violations;
  obs["three_between_violations"] = three_between_violations;
  obs["rectangle_triples"] = rectangles.triples;
  obs["rectangle_equal_level_triples"] = rectangles.equal_level_triples;
  obs["rectangle_containment_violations"] = rectangles.containment_violations;
  obs["rectangle_shape_violations"] = rectangles.shape_violations;
  obs["rectangle_max_diagonal_ratio"] = rectangles.max_diagonal_ratio;
  j["observations"] = std::move(obs);

  Json l;
  l["pairs_checked"] = lemmas.pairs_checked;
  l["slack"] = lemmas.slack;
  l["max_hausdorff_ratio"] = lemmas.max_hausdorff_ratio;
  l["ratio_witness"] = {lemmas.ratio_witness_u, lemmas.ratio_witness_v};
  l["max_upper_bound_use"] = lemmas.max_upper_bound_use;
  l["min_lower_bound_margin"] = lemmas.min_lower_bound_margin;
  l["hausdorff_violations"] = lemmas.hausdorff_violation_count;
  l["hausdorff_flagged_low_level"] = lemmas.hausdorff_flagged_count;
  l["distance_violations"] = lemmas.distance_violation_count;
  l["pass"] = lemmas.passed();
  j["level_bounds"] = std::move(l);
  return j;
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_points_csv(std::ostream& out, std::span<const Point> points) {
  out << "x,y\n";
  for (const Point& p : points) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

std::vector<Point> read_points_csv(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t number = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line == "x,y") continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(number) + ": expected 'x,y'");
    }
    const double x = parse_double(trim(line.substr(0, comma)), number);
    const double y = parse_double(trim(line.substr(comma + 1)), number);
    try {
      points.emplace_back(x, y);
    } catch (const std::exception& ex) {
      throw std::invalid_argument("line " + std::to_string(number) + ": " + ex.what());
    }
  }
  return points;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hfspan
