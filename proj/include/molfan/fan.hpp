#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "molfan/diagnostics.hpp"
#include "molfan/error.hpp"
#include "molfan/geometry.hpp"
#include "molfan/lp.hpp"
#include "molfan/polytope.hpp"

namespace molfan {

/// Forms whose unique maximizer is one vertex: an open cone of directions.
struct CornerClass
{
  std::size_t vertex_index{0};
  AngularInterval cone;
};

/// Forms that maximize a whole edge: the directions of its outward normal. A segment polygon's
/// single edge is maximized from both sides, so its class holds the opposite angle too.
struct FaceClass
{
  std::size_t edge_index{0};
  Angle normal_angle{};
  bool two_sided{false};
};

enum class ClassKind { Corner, Face };

struct EquivalenceClass
{
  std::size_t class_id{0};
  std::variant<CornerClass, FaceClass> kind;

  ClassKind kind_tag() const noexcept { return std::holds_alternative<CornerClass>(kind) ? ClassKind::Corner : ClassKind::Face; }
  bool is_corner() const noexcept { return kind_tag() == ClassKind::Corner; }
  const CornerClass & corner() const { return std::get<CornerClass>(kind); }
  const FaceClass & face() const { return std::get<FaceClass>(kind); }
};

struct FanOptions
{
  /// Accept segments and single points (I < 3).
  bool allow_degenerate{false};
  double eps_angle{default_eps_angle};
};

/// Partition of all nonzero objective directions into argmax classes over a polygon: one open cone
/// per vertex and one boundary angle per edge, I + J classes in total.
///
/// Class ids are the vertex indices for corners, followed by I + edge index for faces.
class QuotientSet
{
public:
  QuotientSet(Polygon polygon, std::vector<EquivalenceClass> classes, std::vector<std::pair<Angle, std::size_t>> boundaries,
              std::vector<std::size_t> sector_after, double eps_angle)
      : polygon_(std::move(polygon)), classes_(std::move(classes)), boundaries_(std::move(boundaries)),
        sector_after_(std::move(sector_after)), eps_angle_(eps_angle)
  {}

  const Polygon & polygon() const noexcept { return polygon_; }
  const std::vector<EquivalenceClass> & classes() const noexcept { return classes_; }
  const EquivalenceClass & operator[](std::size_t class_id) const { return classes_.at(class_id); }

  std::size_t size() const noexcept { return classes_.size(); }
  std::size_t corner_count() const noexcept { return polygon_.vertex_count(); }
  std::size_t face_count() const noexcept { return polygon_.edge_count(); }
  double eps_angle() const noexcept { return eps_angle_; }

  const EquivalenceClass & corner_class(std::size_t vertex_index) const
  {
    if (vertex_index >= corner_count()) { throw Error(ErrorCode::IndexOutOfRange, "vertex index out of range"); }
    return classes_[vertex_index];
  }

  const EquivalenceClass & face_class(std::size_t edge_index) const
  {
    if (edge_index >= face_count()) { throw Error(ErrorCode::IndexOutOfRange, "edge index out of range"); }
    return classes_[corner_count() + edge_index];
  }

  /// Face angles sorted ascending, each paired with its class id.
  const std::vector<std::pair<Angle, std::size_t>> & boundaries() const noexcept { return boundaries_; }

  /// Class of a direction: binary search over the sorted face angles.
  const EquivalenceClass & classify_direction(Angle a) const
  {
    if (boundaries_.empty()) { return classes_.front(); }
    const auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), a.radians(),
                                     [](double value, const auto & b) { return value < b.first.radians(); });
    const std::size_t n = boundaries_.size();
    const std::size_t above = static_cast<std::size_t>(it - boundaries_.begin()) % n;
    const std::size_t below = (above + n - 1) % n;
    for (const std::size_t k : {below, above}) {
      if (circular_distance(a, boundaries_[k].first) <= eps_angle_) { return classes_[boundaries_[k].second]; }
    }
    return classes_[sector_after_[below]];
  }

private:
  Polygon polygon_;
  std::vector<EquivalenceClass> classes_;
  std::vector<std::pair<Angle, std::size_t>> boundaries_;
  std::vector<std::size_t> sector_after_;  ///< corner class id of the arc that starts at boundaries_[k]
  double eps_angle_;
};

/// Builds the normal fan of a polygon. Each vertex cone runs from the outward normal of its incoming
/// edge to that of its outgoing edge.
inline QuotientSet build_fan(const Polygon & p, const FanOptions & options = {})
{
  diagnostics::counters().fan_builds++;
  const std::size_t n = p.vertex_count();
  if (n < 3 && !options.allow_degenerate) {
    throw Error(ErrorCode::NotAPolygon, "the feasible region is a segment or a point; enable degenerate handling");
  }

  std::vector<EquivalenceClass> classes;
  std::vector<std::pair<Angle, std::size_t>> boundaries;
  std::vector<std::size_t> sector_after;

  if (n == 1) {
    classes.push_back({0, CornerClass{0, AngularInterval::full()}});
  } else if (n == 2) {
    const Angle out = p.edges()[0].normal_angle;
    const Angle opposite = out + std::numbers::pi;
    // the head of the edge wins on the arc from its outward normal round to the opposite normal
    classes.push_back({0, CornerClass{0, AngularInterval(opposite, out)}});
    classes.push_back({1, CornerClass{1, AngularInterval(out, opposite)}});
    classes.push_back({2, FaceClass{0, out, true}});
    boundaries = {{out, 2}, {opposite, 2}};
    std::sort(boundaries.begin(), boundaries.end(), [](const auto & a, const auto & b) { return a.first.radians() < b.first.radians(); });
    for (const auto & b : boundaries) { sector_after.push_back(b.first == out ? 1 : 0); }
  } else {
    for (std::size_t v = 0; v < n; ++v) {
      const auto [incoming, outgoing] = incident_edges(p, v);
      classes.push_back({v, CornerClass{v, AngularInterval(incoming.normal_angle, outgoing.normal_angle)}});
    }
    for (std::size_t e = 0; e < n; ++e) {
      classes.push_back({n + e, FaceClass{e, p.edges()[e].normal_angle, false}});
      boundaries.emplace_back(p.edges()[e].normal_angle, n + e);
    }
    std::sort(boundaries.begin(), boundaries.end(), [](const auto & a, const auto & b) { return a.first.radians() < b.first.radians(); });
    for (const auto & b : boundaries) {
      // the arc after edge e's normal belongs to edge e's head vertex
      const std::size_t edge = b.second - n;
      sector_after.push_back(p.edges()[edge].head_index);
    }
  }

  return QuotientSet(p, std::move(classes), std::move(boundaries), std::move(sector_after), options.eps_angle);
}

/// Equivalence class of f: same class iff same argmax set over the polygon.
inline const EquivalenceClass & class_of(const QuotientSet & q, const LinearForm & f) { return q.classify_direction(f.direction()); }

/// Open cone of directions φ for which the vertex is the unique maximizer.
inline AngularInterval sensitivity_interval(const QuotientSet & q, std::size_t vertex_index)
{
  return q.corner_class(vertex_index).corner().cone;
}

/// Argmax set predicted by a class (optimal value left at zero).
inline ArgmaxSet argmax_of_class(const EquivalenceClass & c)
{
  if (c.is_corner()) { return {ArgmaxKind::Vertex, c.corner().vertex_index, 0.0}; }
  return {ArgmaxKind::Edge, c.face().edge_index, 0.0};
}

}  // namespace molfan
