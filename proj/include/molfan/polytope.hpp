#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "molfan/diagnostics.hpp"
#include "molfan/error.hpp"
#include "molfan/geometry.hpp"

namespace molfan {

/// Row a1·x1 + a2·x2 ≤ b.
struct Halfspace
{
  double a1{0.0};
  double a2{0.0};
  double b{0.0};

  Vector2 normal() const { return {a1, a2}; }
};

/// Constraint data {x : A·x ≤ b} plus, by default, the implicit rows −x1 ≤ 0 and −x2 ≤ 0.
class HalfspaceSystem
{
public:
  HalfspaceSystem() = default;

  explicit HalfspaceSystem(std::vector<Halfspace> rows, bool include_nonnegativity = true)
      : rows_(std::move(rows)), include_nonnegativity_(include_nonnegativity)
  {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto & r = rows_[i];
      if (!std::isfinite(r.a1) || !std::isfinite(r.a2) || !std::isfinite(r.b)) {
        throw Error(ErrorCode::NonFinite, "constraint row " + std::to_string(i + 1) + " has a non-finite entry");
      }
      if (r.a1 == 0.0 && r.a2 == 0.0) {
        throw Error(ErrorCode::InvalidSystem, "constraint row " + std::to_string(i + 1) + " has a zero normal");
      }
    }
  }

  const std::vector<Halfspace> & rows() const noexcept { return rows_; }
  bool include_nonnegativity() const noexcept { return include_nonnegativity_; }

  /// User rows followed by the nonnegativity rows when enabled.
  std::vector<Halfspace> all_rows() const
  {
    std::vector<Halfspace> out = rows_;
    if (include_nonnegativity_) {
      out.push_back({-1.0, 0.0, 0.0});
      out.push_back({0.0, -1.0, 0.0});
    }
    return out;
  }

  /// max(1, max|a|, max|b|) over all rows; multiplies eps_geom.
  double scale() const
  {
    double s = 1.0;
    for (const auto & r : rows_) { s = std::max({s, std::abs(r.a1), std::abs(r.a2), std::abs(r.b)}); }
    return s;
  }

private:
  std::vector<Halfspace> rows_;
  bool include_nonnegativity_{true};
};

/// Boundary segment from vertices[tail_index] to vertices[head_index].
struct Edge
{
  std::size_t tail_index{0};
  std::size_t head_index{0};
  Vector2 outward_normal{};
  Angle normal_angle{};
};

/// Convex polygon with counterclockwise vertices. A segment (two vertices, one edge) and a single
/// point (one vertex, no edge) are valid degenerate polygons.
class Polygon
{
public:
  /// Vertices must be distinct, counterclockwise and strictly convex.
  explicit Polygon(std::vector<Vector2> ccw_vertices) : vertices_(std::move(ccw_vertices))
  {
    const std::size_t n = vertices_.size();
    if (n == 0) { throw Error(ErrorCode::EmptyRegion, "polygon needs at least one vertex"); }
    if (n == 2 && vertices_[0] == vertices_[1]) {
      throw Error(ErrorCode::InvalidSystem, "segment endpoints coincide");
    }
    if (n >= 3) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto & a = vertices_[i];
        const auto & b = vertices_[(i + 1) % n];
        const auto & c = vertices_[(i + 2) % n];
        if (!(cross(b - a, c - b) > 0.0)) {
          throw Error(ErrorCode::InvalidSystem, "vertices are not strictly convex in counterclockwise order");
        }
      }
    }
    if (n >= 2) {
      const std::size_t edge_count = n == 2 ? 1 : n;
      edges_.reserve(edge_count);
      for (std::size_t i = 0; i < edge_count; ++i) {
        const std::size_t j = (i + 1) % n;
        const Vector2 d = vertices_[j] - vertices_[i];
        const Vector2 outward = normalized(Vector2{d.x2, -d.x1});
        edges_.push_back(Edge{i, j, outward, angle_of(outward)});
      }
    }
  }

  const std::vector<Vector2> & vertices() const noexcept { return vertices_; }
  const std::vector<Edge> & edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  double max_vertex_norm() const noexcept
  {
    double m = 0.0;
    for (const auto & v : vertices_) { m = std::max(m, norm(v)); }
    return m;
  }

  /// Index of the edge joining two vertices that are adjacent on the boundary, if they are.
  std::optional<std::size_t> edge_between(std::size_t i, std::size_t j) const noexcept
  {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto & edge = edges_[e];
      if ((edge.tail_index == i && edge.head_index == j) || (edge.tail_index == j && edge.head_index == i)) {
        return e;
      }
    }
    return std::nullopt;
  }

private:
  std::vector<Vector2> vertices_;
  std::vector<Edge> edges_;
};

namespace detail {

inline bool nearly_parallel(const Vector2 & u, const Vector2 & v) noexcept
{
  return std::abs(cross(u, v)) <= 1e-12 * norm(u) * norm(v);
}

inline std::optional<Vector2> line_intersection(const Halfspace & p, const Halfspace & q)
{
  const double det = p.a1 * q.a2 - p.a2 * q.a1;
  if (nearly_parallel(p.normal(), q.normal())) { return std::nullopt; }
  return Vector2{(p.b * q.a2 - p.a2 * q.b) / det, (p.a1 * q.b - p.b * q.a1) / det};
}

inline bool satisfies_all(const std::vector<Halfspace> & rows, const Vector2 & x, double tol) noexcept
{
  return std::all_of(rows.begin(), rows.end(), [&](const Halfspace & r) { return r.a1 * x.x1 + r.a2 * x.x2 <= r.b + tol; });
}

/// Feasible pairwise intersections of constraint lines, deduplicated within `tol` (max-norm).
inline std::vector<Vector2> feasible_line_intersections(const std::vector<Halfspace> & rows, double tol)
{
  std::vector<Vector2> points;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto x = line_intersection(rows[i], rows[j]);
      if (!x || !satisfies_all(rows, *x, tol)) { continue; }
      const bool duplicate =
        std::any_of(points.begin(), points.end(), [&](const Vector2 & p) { return max_abs_diff(p, *x) <= tol; });
      if (!duplicate) { points.push_back(*x); }
    }
  }
  return points;
}

/// Andrew's monotone chain. Points within `tol` of the line through their neighbours are dropped,
/// so the result is strictly convex. Starts at the lexicographically smallest point.
inline std::vector<Vector2> convex_hull_ccw(std::vector<Vector2> points, double tol)
{
  std::sort(points.begin(), points.end(), [](const Vector2 & a, const Vector2 & b) {
    return a.x1 < b.x1 || (a.x1 == b.x1 && a.x2 < b.x2);
  });
  if (points.size() < 2) { return points; }

  // drops hull.back() when it is not a strict left turn from hull[-2] towards p
  const auto should_pop = [tol](const std::vector<Vector2> & hull, const Vector2 & p) {
    const Vector2 & o = hull[hull.size() - 2];
    const Vector2 & a = hull.back();
    return cross(a - o, p - o) <= tol * norm(p - o);
  };

  std::vector<Vector2> hull;
  hull.reserve(2 * points.size());
  for (const auto & p : points) {
    while (hull.size() >= 2 && should_pop(hull, p)) { hull.pop_back(); }
    hull.push_back(p);
  }
  const std::size_t lower_size = hull.size() + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (hull.size() >= lower_size && should_pop(hull, *it)) { hull.pop_back(); }
    hull.push_back(*it);
  }
  hull.pop_back();
  return hull;
}

/// Empty-vs-unbounded decision when the row normals do not span the plane: the region is then a
/// (possibly empty) strip, halfplane or the whole plane.
[[noreturn]] inline void reject_rank_deficient(const std::vector<Halfspace> & rows, double tol)
{
  if (rows.empty()) { throw Error(ErrorCode::UnboundedRegion, "no constraints: the feasible region is the whole plane"); }
  const Vector2 u = normalized(rows.front().normal());
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto & r : rows) {
    // r.normal() = lambda·u, so the row reads lambda·t ≤ b with t = ⟨u, x⟩
    const double lambda = dot(r.normal(), u);
    if (lambda > 0.0) {
      hi = std::min(hi, r.b / lambda);
    } else {
      lo = std::max(lo, r.b / lambda);
    }
  }
  if (lo > hi + tol) { throw Error(ErrorCode::EmptyRegion, "the feasible region is empty"); }
  throw Error(ErrorCode::UnboundedRegion, "the feasible region is unbounded");
}

}  // namespace detail

/// True iff the recession cone {d : A·d ≤ 0 (and d ≥ 0 when enabled)} is {0}.
inline bool is_bounded(const HalfspaceSystem & h)
{
  const auto rows = h.all_rows();
  if (rows.empty()) { return false; }
  // A nontrivial 2D cone always has a boundary ray orthogonal to one of the row normals.
  for (const auto & r : rows) {
    const Vector2 t = normalized(perp(r.normal()));
    for (const Vector2 & d : {t, -t}) {
      const bool recedes = std::all_of(rows.begin(), rows.end(), [&](const Halfspace & q) {
        return dot(q.normal(), d) <= 1e-12 * norm(q.normal());
      });
      if (recedes) { return false; }
    }
  }
  return true;
}

/// Explicit polygon of S = {x : A·x ≤ b, x ≥ 0}.
///
/// Candidate vertices are the intersections of every pair of constraint lines. They are kept when
/// feasible within eps_geom·scale, merged when closer than eps_geom·scale, and ordered by a convex
/// hull pass. Segments and single points come back as 2- and 1-vertex polygons.
inline Polygon build_polygon(const HalfspaceSystem & h, double eps_geom = 1e-9)
{
  diagnostics::counters().polygon_builds++;
  const auto rows = h.all_rows();
  const double tol = eps_geom * h.scale();

  bool full_rank = false;
  for (std::size_t i = 0; i < rows.size() && !full_rank; ++i) {
    for (std::size_t j = i + 1; j < rows.size() && !full_rank; ++j) {
      full_rank = !detail::nearly_parallel(rows[i].normal(), rows[j].normal());
    }
  }
  if (!full_rank) { detail::reject_rank_deficient(rows, tol); }

  auto points = detail::feasible_line_intersections(rows, tol);
  if (points.empty()) { throw Error(ErrorCode::EmptyRegion, "the feasible region is empty"); }
  if (!is_bounded(h)) { throw Error(ErrorCode::UnboundedRegion, "the feasible region is unbounded"); }

  return Polygon(detail::convex_hull_ccw(std::move(points), tol));
}

/// (incoming, outgoing) edges at a vertex, in counterclockwise boundary order.
inline std::pair<Edge, Edge> incident_edges(const Polygon & p, std::size_t vertex_index)
{
  const std::size_t n = p.vertex_count();
  if (n < 3) { throw Error(ErrorCode::NotAPolygon, "incident edges need a polygon with at least 3 vertices"); }
  if (vertex_index >= n) { throw Error(ErrorCode::IndexOutOfRange, "vertex index out of range"); }
  return {p.edges()[(vertex_index + n - 1) % n], p.edges()[vertex_index]};
}

}  // namespace molfan
