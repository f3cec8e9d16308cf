#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "molfan/fan.hpp"
#include "molfan/lp.hpp"
#include "molfan/molpp.hpp"
#include "molfan/tolerances.hpp"

#ifndef MOLFAN_VERSION
#define MOLFAN_VERSION "0.1.0"
#endif

namespace molfan::report {

enum class AngleUnit { Degrees, Radians };

struct OutputOptions
{
  AngleUnit angle_unit{AngleUnit::Degrees};
  int precision{3};
  Tolerances tolerances{};
};

using Json = nlohmann::ordered_json;

/// Maps −0.0 to 0.0 so that output never depends on the sign of a zero.
inline double clean(double v) noexcept { return v == 0.0 ? 0.0 : v; }

/// Fixed-point text, without a "-0.000" artefact for values that round to zero.
inline std::string fixed(double v, int precision)
{
  std::string s = fmt::format("{:.{}f}", clean(v), precision);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) { s.erase(0, 1); }
  return s;
}

inline double angle_value(Angle a, const OutputOptions & o)
{
  return o.angle_unit == AngleUnit::Degrees ? a.degrees() : a.radians();
}

inline std::string unit_suffix(const OutputOptions & o) { return o.angle_unit == AngleUnit::Degrees ? "deg" : "rad"; }

inline std::string point_text(const Vector2 & v, const OutputOptions & o)
{
  return "(" + fixed(v.x1, o.precision) + ", " + fixed(v.x2, o.precision) + ")";
}

inline std::string coefficient_text(const LinearForm & f) { return fmt::format("({:g}, {:g})", clean(f.c1()), clean(f.c2())); }

inline std::string interval_text(const AngularInterval & i, const OutputOptions & o)
{
  if (i.is_full()) { return "all directions"; }
  return "(" + fixed(angle_value(i.lo(), o), o.precision) + ", " + fixed(angle_value(i.hi(), o), o.precision) + ") " + unit_suffix(o);
}

inline std::string class_label(const EquivalenceClass & c)
{
  if (c.is_corner()) { return fmt::format("corner x{}", c.corner().vertex_index + 1); }
  return fmt::format("face F{}", c.face().edge_index + 1);
}

inline std::string argmax_text(const Polygon & p, const ArgmaxSet & a, const OutputOptions & o)
{
  if (a.kind == ArgmaxKind::Vertex) { return fmt::format("vertex x{} = {}", a.index + 1, point_text(p.vertices()[a.index], o)); }
  const Edge & e = p.edges()[a.index];
  return fmt::format("face F{} = [{}, {}]", a.index + 1, point_text(p.vertices()[e.tail_index], o),
                     point_text(p.vertices()[e.head_index], o));
}

// ---------------------------------------------------------------------------------------------
// Text

inline void write_polygon_text(std::ostream & out, const Polygon & p, const OutputOptions & o)
{
  out << "polygon: " << p.vertex_count() << " vertices, " << p.edge_count() << " edges\n";
  for (std::size_t i = 0; i < p.vertex_count(); ++i) { out << "  x" << i + 1 << " = " << point_text(p.vertices()[i], o) << "\n"; }
  for (std::size_t e = 0; e < p.edge_count(); ++e) {
    const Edge & edge = p.edges()[e];
    out << "  F" << e + 1 << " = x" << edge.tail_index + 1 << " -> x" << edge.head_index + 1 << ", outward normal angle "
        << fixed(angle_value(edge.normal_angle, o), o.precision) << " " << unit_suffix(o) << "\n";
  }
}

inline void write_fan_text(std::ostream & out, const QuotientSet & q, const OutputOptions & o)
{
  write_polygon_text(out, q.polygon(), o);
  out << "classes: " << q.size() << " (" << q.corner_count() << " corner, " << q.face_count() << " face)\n";
  for (const auto & c : q.classes()) {
    out << "  [" << c.class_id << "] " << class_label(c) << ": ";
    if (c.is_corner()) {
      out << "cone " << interval_text(c.corner().cone, o) << "\n";
    } else {
      out << "angle " << fixed(angle_value(c.face().normal_angle, o), o.precision);
      if (c.face().two_sided) {
        out << " and " << fixed(angle_value(c.face().normal_angle + std::numbers::pi, o), o.precision);
      }
      out << " " << unit_suffix(o) << "\n";
    }
  }
}

inline void write_verdict_text(std::ostream & out, const ClassificationReport & r, bool verified, const OutputOptions & o)
{
  out << "verdict: ";
  if (const auto * v = std::get_if<IdealVertex>(&r.verdict)) {
    out << "IdealVertex x" << v->vertex_index + 1 << " = " << point_text(v->point, o);
  } else if (const auto * f = std::get_if<IdealFace>(&r.verdict)) {
    out << "IdealFace F" << f->edge_index + 1 << " = [" << point_text(f->tail, o) << ", " << point_text(f->head, o) << "]";
  } else {
    out << "NoIdeal";
  }
  out << "\n";
  if (r.has_ideal()) { out << "verified: " << (verified ? "yes" : "no") << "\n"; }
}

inline void write_classification_text(std::ostream & out, const ClassificationReport & r, const std::vector<LinearForm> & forms,
                                      bool verified, const OutputOptions & o)
{
  write_fan_text(out, r.fan, o);
  out << "objectives:\n";
  for (const auto & a : r.per_objective) {
    const auto & cls = r.fan[a.class_id];
    out << "  f" << a.objective + 1 << " = " << coefficient_text(forms[a.objective]) << ": angle "
        << fixed(angle_value(a.direction, o), o.precision) << " " << unit_suffix(o) << " -> class " << a.class_id << " ("
        << class_label(cls) << "), argmax " << argmax_text(r.fan.polygon(), argmax_of_class(cls), o) << "\n";
  }
  out << "groups:\n";
  for (const auto & [id, members] : r.groups) {
    out << "  class " << id << ":";
    for (const auto k : members) { out << " f" << k + 1; }
    out << "\n";
  }
  write_verdict_text(out, r, verified, o);
}

// ---------------------------------------------------------------------------------------------
// JSON

inline Json header_json(const std::string & command, const OutputOptions & o)
{
  Json j;
  j["tool"] = "molfan";
  j["version"] = MOLFAN_VERSION;
  j["command"] = command;
  j["tolerances"] = {{"eps_geom", o.tolerances.eps_geom}, {"eps_val", o.tolerances.eps_val}, {"eps_angle", o.tolerances.eps_angle}};
  j["angle_unit"] = unit_suffix(o);
  return j;
}

inline Json point_json(const Vector2 & v) { return Json::array({clean(v.x1), clean(v.x2)}); }

inline Json argmax_json(const Polygon & p, const ArgmaxSet & a)
{
  Json j;
  if (a.kind == ArgmaxKind::Vertex) {
    j["kind"] = "vertex";
    j["vertex"] = a.index + 1;
    j["point"] = point_json(p.vertices()[a.index]);
  } else {
    const Edge & e = p.edges()[a.index];
    j["kind"] = "face";
    j["edge"] = a.index + 1;
    j["endpoints"] = Json::array({point_json(p.vertices()[e.tail_index]), point_json(p.vertices()[e.head_index])});
  }
  return j;
}

inline void add_fan_json(Json & j, const QuotientSet & q, const OutputOptions & o)
{
  const Polygon & p = q.polygon();
  j["vertices"] = Json::array();
  for (std::size_t i = 0; i < p.vertex_count(); ++i) {
    j["vertices"].push_back({{"index", i + 1}, {"point", point_json(p.vertices()[i])}});
  }
  j["edges"] = Json::array();
  for (std::size_t e = 0; e < p.edge_count(); ++e) {
    const Edge & edge = p.edges()[e];
    j["edges"].push_back({{"index", e + 1},
                          {"tail", edge.tail_index + 1},
                          {"head", edge.head_index + 1},
                          {"outward_normal", point_json(edge.outward_normal)},
                          {"normal_angle", angle_value(edge.normal_angle, o)}});
  }
  j["classes"] = Json::array();
  for (const auto & c : q.classes()) {
    Json cj;
    cj["id"] = c.class_id;
    if (c.is_corner()) {
      const auto & cone = c.corner().cone;
      cj["kind"] = "corner";
      cj["vertex"] = c.corner().vertex_index + 1;
      if (cone.is_full()) {
        cj["cone"] = nullptr;
        cj["full_circle"] = true;
      } else {
        cj["cone"] = Json::array({angle_value(cone.lo(), o), angle_value(cone.hi(), o)});
      }
    } else {
      cj["kind"] = "face";
      cj["edge"] = c.face().edge_index + 1;
      cj["angle"] = angle_value(c.face().normal_angle, o);
      if (c.face().two_sided) { cj["opposite_angle"] = angle_value(c.face().normal_angle + std::numbers::pi, o); }
    }
    j["classes"].push_back(std::move(cj));
  }
}

inline void add_classification_json(Json & j, const ClassificationReport & r, const std::vector<LinearForm> & forms, bool verified,
                                    const OutputOptions & o)
{
  add_fan_json(j, r.fan, o);
  j["objectives"] = Json::array();
  for (const auto & a : r.per_objective) {
    const auto & f = forms[a.objective];
    j["objectives"].push_back({{"index", a.objective + 1},
                               {"c", Json::array({clean(f.c1()), clean(f.c2())})},
                               {"angle", angle_value(a.direction, o)},
                               {"class_id", a.class_id},
                               {"kind", a.kind == ClassKind::Corner ? "corner" : "face"},
                               {"argmax", argmax_json(r.fan.polygon(), argmax_of_class(r.fan[a.class_id]))}});
  }
  j["groups"] = Json::array();
  for (const auto & [id, members] : r.groups) {
    Json mj = Json::array();
    for (const auto k : members) { mj.push_back(k + 1); }
    j["groups"].push_back({{"class_id", id}, {"objectives", std::move(mj)}});
  }
  Json v;
  if (const auto * iv = std::get_if<IdealVertex>(&r.verdict)) {
    v["kind"] = "IdealVertex";
    v["vertex"] = iv->vertex_index + 1;
    v["point"] = point_json(iv->point);
  } else if (const auto * fv = std::get_if<IdealFace>(&r.verdict)) {
    v["kind"] = "IdealFace";
    v["edge"] = fv->edge_index + 1;
    v["endpoints"] = Json::array({point_json(fv->tail), point_json(fv->head)});
  } else {
    v["kind"] = "NoIdeal";
  }
  if (r.has_ideal()) { v["verified"] = verified; }
  j["verdict"] = std::move(v);
}

}  // namespace molfan::report
