#pragma once

#include <span>
#include <string>

#include "hfspan/graph.hpp"

namespace hfspan {

struct SvgStyle {
  double width = 900.0;
  double margin = 20.0;
  double stroke_width = 1.0;
  double vertex_radius = 2.0;
  bool show_vertices = true;
};

/// Renders the graph's edges, y axis up. When `levels` has one entry per
/// vertex the vertices are coloured by level. The output is a pure function
/// of its inputs apart from the version comment on the second line.
std::string render_svg(const GeoGraph& g, std::span<const int> levels = {},
                       const SvgStyle& style = {});

}  // namespace hfspan
