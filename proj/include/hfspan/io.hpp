#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hfspan/graph.hpp"
#include "hfspan/koch.hpp"
#include "hfspan/split_tree.hpp"
#include "hfspan/verify.hpp"

namespace hfspan {

using Json = nlohmann::ordered_json;

/// {"vertices": [[x,y],...], "edges": [[i,j],...]} plus an optional
/// "metadata" object. Weights are not stored.
Json graph_to_json(const GeoGraph& g, const Json& metadata = Json());

/// Inverse of graph_to_json; weights are recomputed from the coordinates.
/// Throws std::invalid_argument on malformed input.
GeoGraph graph_from_json(const Json& j);

/// {"s": s, "pairs": [{"a": [...], "b": [...], "rep_a": i, "rep_b": j, "r": r}]}
Json wspd_to_json(const Wspd& wspd);

/// Infinite ratios become null with "unreachable": true.
Json report_to_json(const DilationReport& report);

Json koch_report_to_json(const KochGraph& k, const KochLemmaReport& lemmas,
                         const RectangleCheck& rectangles, std::size_t edge_violations,
                         std::size_t three_between_violations);

/// Header "x,y" then one point per line, coordinates in %.17g.
void write_points_csv(std::ostream& out, std::span<const Point> points);
/// Throws std::invalid_argument with the offending line number.
std::vector<Point> read_points_csv(std::istream& in);

/// "%.17g": reads back as the same double.
std::string format_double(double value);

std::string read_text_file(const std::filesystem::path& path);
/// Throws std::runtime_error naming the path when the write fails.
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// Pretty-printed with a trailing newline.
std::string dump_json(const Json& j);

}  // namespace hfspan
