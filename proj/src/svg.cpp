#include "hfspan/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "hfspan/version.hpp"

namespace hfspan {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const char* level_colour(int level) {
  static constexpr std::array<const char*, 8> palette{
      "#1b1b1b", "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2"};
  return palette[static_cast<std::size_t>(level) % palette.size()];
}

}  // namespace

std::string render_svg(const GeoGraph& g, std::span<const int> levels, const SvgStyle& style) {
  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  if (g.vertex_count() > 0) {
    min_x = max_x = g.point(0).x;
    min_y = max_y = g.point(0).y;
    for (const Point& p : g.points()) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double span_x = std::max(max_x - min_x, 1e-12);
  const double span_y = std::max(max_y - min_y, 1e-12);
  const double scale = (style.width - 2.0 * style.margin) / std::max(span_x, span_y);
  const double width = span_x * scale + 2.0 * style.margin;
  const double height = span_y * scale + 2.0 * style.margin;
  auto sx = [&](double x) { return fmt(style.margin + (x - min_x) * scale); };
  auto sy = [&](double y) { return fmt(height - style.margin - (y - min_y) * scale); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- hfspan " << kVersion << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <g stroke=\"black\" stroke-width=\"" << fmt(style.stroke_width)
      << "\" stroke-linecap=\"round\" fill=\"none\">\n";
  for (const Edge& e : g.edges()) {
    const Point& a = g.point(e.u);
    const Point& b = g.point(e.v);
    out << "    <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
        << "\" y2=\"" << sy(b.y) << "\"/>\n";
  }
  out << "  </g>\n";
  if (style.show_vertices && g.vertex_count() > 0) {
    const bool coloured = levels.size() == g.vertex_count();
    out << "  <g stroke=\"none\">\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const Point& p = g.point(v);
      out << "    <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\""
          << fmt(style.vertex_radius) << "\" fill=\"" << (coloured ? level_colour(levels[v]) : "#1f77b4")
          << "\"";
      if (coloured) out << " data-level=\"" << levels[v] << "\"";
      out << "/>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hfspan
