#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "molfan/error.hpp"
#include "molfan/fan.hpp"
#include "molfan/lp.hpp"
#include "molfan/polytope.hpp"

namespace molfan::svg {

namespace detail {

inline constexpr double canvas = 640.0;
inline constexpr double margin = 70.0;

inline constexpr std::array<const char *, 8> palette = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                                        "#66a61e", "#e6ab02", "#a6761d", "#666666"};

inline std::string num(double v)
{
  std::string s = fmt::format("{:.2f}", v == 0.0 ? 0.0 : v);
  return s == "-0.00" ? "0.00" : s;
}

/// World → screen mapping; y points down on screen.
struct Frame
{
  double min_x1{0.0};
  double min_x2{0.0};
  double scale{1.0};
  double pad_x{0.0};
  double pad_y{0.0};

  explicit Frame(const std::vector<Vector2> & vs)
  {
    double max_x1 = vs.front().x1;
    double max_x2 = vs.front().x2;
    min_x1 = max_x1;
    min_x2 = max_x2;
    for (const auto & v : vs) {
      min_x1 = std::min(min_x1, v.x1);
      min_x2 = std::min(min_x2, v.x2);
      max_x1 = std::max(max_x1, v.x1);
      max_x2 = std::max(max_x2, v.x2);
    }
    double extent = std::max(max_x1 - min_x1, max_x2 - min_x2);
    if (extent <= 0.0) { extent = 1.0; }
    scale = (canvas - 2.0 * margin) / extent;
    pad_x = (canvas - 2.0 * margin - (max_x1 - min_x1) * scale) / 2.0;
    pad_y = (canvas - 2.0 * margin - (max_x2 - min_x2) * scale) / 2.0;
  }

  std::pair<double, double> map(const Vector2 & v) const
  {
    return {margin + pad_x + (v.x1 - min_x1) * scale, canvas - margin - pad_y - (v.x2 - min_x2) * scale};
  }

  /// Screen offset of a world direction scaled to `length` pixels.
  static std::pair<double, double> direction(const Vector2 & unit, double length) { return {unit.x1 * length, -unit.x2 * length}; }
};

}  // namespace detail

/// Writes a static figure: the feasible polygon, vertex labels, outward edge normals, the normal
/// cone of each vertex as a shaded sector, and one arrow per objective coloured by its class.
inline void render_svg(const QuotientSet & fan, const std::vector<LinearForm> & objectives, std::ostream & out)
{
  using detail::num;
  const Polygon & p = fan.polygon();
  const auto & vs = p.vertices();
  const detail::Frame frame(vs);
  const double arc_radius = 28.0;
  const double normal_length = 36.0;
  const double arrow_length = 120.0;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
                     static_cast<int>(detail::canvas));
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  // region
  std::string points;
  for (const auto & v : vs) {
    const auto [x, y] = frame.map(v);
    points += (points.empty() ? "" : " ") + num(x) + "," + num(y);
  }
  if (vs.size() >= 3) {
    out << "  <polygon class=\"region\" points=\"" << points << "\" fill=\"#dbe9f6\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  } else if (vs.size() == 2) {
    out << "  <polyline class=\"region\" points=\"" << points << "\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"3\"/>\n";
  }

  // normal cones
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto & cone = fan.corner_class(i).corner().cone;
    const auto [cx, cy] = frame.map(vs[i]);
    if (cone.is_full()) {
      out << fmt::format("  <circle class=\"cone\" data-vertex=\"{}\" data-span-deg=\"360.000\" cx=\"{}\" cy=\"{}\" r=\"{}\" "
                         "fill=\"#f4a261\" fill-opacity=\"0.45\"/>\n",
                         i + 1, num(cx), num(cy), num(arc_radius));
      continue;
    }
    const auto [ax, ay] = detail::Frame::direction(unit_vector(cone.lo()), arc_radius);
    const auto [bx, by] = detail::Frame::direction(unit_vector(cone.hi()), arc_radius);
    const int large_arc = cone.width() > std::numbers::pi ? 1 : 0;
    // counterclockwise in the world is counterclockwise on screen too, i.e. sweep-flag 0 with y flipped
    out << fmt::format("  <path class=\"cone\" data-vertex=\"{}\" data-lo-deg=\"{:.3f}\" data-hi-deg=\"{:.3f}\" "
                       "data-span-deg=\"{:.3f}\" d=\"M {} {} L {} {} A {} {} 0 {} 0 {} {} Z\" fill=\"#f4a261\" "
                       "fill-opacity=\"0.45\" stroke=\"#e76f51\" stroke-width=\"1\"/>\n",
                       i + 1, cone.lo().degrees(), cone.hi().degrees(), cone.width() * 180.0 / std::numbers::pi, num(cx),
                       num(cy), num(cx + ax), num(cy + ay), num(arc_radius), num(arc_radius), large_arc, num(cx + bx),
                       num(cy + by));
  }

  // outward normals
  for (std::size_t e = 0; e < p.edge_count(); ++e) {
    const Edge & edge = p.edges()[e];
    const Vector2 mid = 0.5 * (vs[edge.tail_index] + vs[edge.head_index]);
    const auto [mx, my] = frame.map(mid);
    const auto [dx, dy] = detail::Frame::direction(edge.outward_normal, normal_length);
    out << fmt::format("  <line class=\"normal\" data-edge=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#555555\" "
                       "stroke-width=\"1.5\" stroke-dasharray=\"4 3\"/>\n",
                       e + 1, num(mx), num(my), num(mx + dx), num(my + dy));
    out << fmt::format("  <text class=\"edge-label\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" "
                       "fill=\"#555555\">F{}</text>\n",
                       num(mx + 1.3 * dx), num(my + 1.3 * dy), e + 1);
  }

  // vertices
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto [x, y] = frame.map(vs[i]);
    out << fmt::format("  <circle class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"3.5\" fill=\"#1f4e79\"/>\n", num(x), num(y));
    out << fmt::format("  <text class=\"vertex-label\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" "
                       "fill=\"#000000\">x{} ({:g}, {:g})</text>\n",
                       num(x + 6.0), num(y - 6.0), i + 1, vs[i].x1 == 0.0 ? 0.0 : vs[i].x1, vs[i].x2 == 0.0 ? 0.0 : vs[i].x2);
  }

  // objectives
  if (!objectives.empty()) {
    Vector2 centroid{};
    for (const auto & v : vs) { centroid = centroid + v; }
    centroid = centroid / static_cast<double>(vs.size());
    const auto [ox, oy] = frame.map(centroid);
    for (std::size_t k = 0; k < objectives.size(); ++k) {
      const auto & f = objectives[k];
      const auto & cls = class_of(fan, f);
      const char * color = detail::palette[cls.class_id % detail::palette.size()];
      const Vector2 u = unit_vector(f.direction());
      const auto [dx, dy] = detail::Frame::direction(u, arrow_length);
      const double tx = ox + dx;
      const double ty = oy + dy;
      // arrowhead: two points 10px back from the tip, 5px either side
      const auto [bx, by] = detail::Frame::direction(u, 10.0);
      const auto [sx, sy] = detail::Frame::direction(perp(u), 5.0);
      out << fmt::format("  <g class=\"objective\" data-objective=\"{}\" data-class=\"{}\">\n", k + 1, cls.class_id);
      out << fmt::format("    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2.5\"/>\n", num(ox),
                         num(oy), num(tx - bx), num(ty - by), color);
      out << fmt::format("    <polygon points=\"{},{} {},{} {},{}\" fill=\"{}\"/>\n", num(tx), num(ty), num(tx - bx + sx),
                         num(ty - by + sy), num(tx - bx - sx), num(ty - by - sy), color);
      out << fmt::format("    <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"{}\">f{}</text>\n",
                         num(tx + 4.0), num(ty - 4.0), color, k + 1);
      out << "  </g>\n";
    }
  }

  out << "</svg>\n";
}

inline std::string render_svg(const QuotientSet & fan, const std::vector<LinearForm> & objectives)
{
  std::ostringstream out;
  render_svg(fan, objectives, out);
  return out.str();
}

inline void render_svg(const QuotientSet & fan, const std::vector<LinearForm> & objectives, const std::string & path)
{
  std::ofstream file(path, std::ios::binary);
  if (!file) { throw Error(ErrorCode::IoError, path + ": cannot open for writing"); }
  render_svg(fan, objectives, file);
  if (!file) { throw Error(ErrorCode::IoError, path + ": write failed"); }
}

}  // namespace molfan::svg
