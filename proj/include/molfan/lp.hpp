#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "molfan/diagnostics.hpp"
#include "molfan/error.hpp"
#include "molfan/geometry.hpp"
#include "molfan/polytope.hpp"

namespace molfan {

/// Objective f(x) = c1·x1 + c2·x2, equivalently r·⟨(cos φ, sin φ), x⟩ with r = ‖c‖ and φ = angle_of(c).
class LinearForm
{
public:
  LinearForm(double c1, double c2) : c1_(c1), c2_(c2)
  {
    if (!std::isfinite(c1) || !std::isfinite(c2)) { throw Error(ErrorCode::NonFinite, "objective coefficients must be finite"); }
    if (c1 == 0.0 && c2 == 0.0) { throw Error(ErrorCode::ZeroForm, "the zero form has no argmax corner or face"); }
  }

  explicit LinearForm(const Vector2 & c) : LinearForm(c.x1, c.x2) {}

  static LinearForm from_polar(double r, Angle phi) { return LinearForm(r * unit_vector(phi)); }

  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }
  Vector2 coefficients() const { return {c1_, c2_}; }

  double magnitude() const noexcept { return std::hypot(c1_, c2_); }
  Angle direction() const { return angle_of(coefficients()); }

  double operator()(const Vector2 & x) const noexcept { return c1_ * x.x1 + c2_ * x.x2; }

  friend LinearForm operator*(double s, const LinearForm & f) { return LinearForm(s * f.c1_, s * f.c2_); }

private:
  double c1_;
  double c2_;
};

/// Line through the origin with the given direction; the kernel of a form c is directed by (−c2, c1).
class KernelLine
{
public:
  explicit KernelLine(const Vector2 & direction) : direction_(direction)
  {
    if (direction.x1 == 0.0 && direction.x2 == 0.0) { throw Error(ErrorCode::ZeroVector, "line direction must be nonzero"); }
  }

  static KernelLine of(const LinearForm & f) { return KernelLine(Vector2{-f.c2(), f.c1()}); }

  const Vector2 & direction() const noexcept { return direction_; }

private:
  Vector2 direction_;
};

/// Orthogonal projection of x onto the line.
inline Vector2 project_onto_line(const Vector2 & x, const KernelLine & d)
{
  const Vector2 u = normalized(d.direction());
  return dot(x, u) * u;
}

/// ‖x − P_d(x)‖, the distance from x to the line.
inline double distance_to_line(const Vector2 & x, const KernelLine & d) { return norm(x - project_onto_line(x, d)); }

enum class ArgmaxKind { Vertex, Edge };

/// Where a form attains its maximum over a polygon: a single corner or a whole face.
struct ArgmaxSet
{
  ArgmaxKind kind{ArgmaxKind::Vertex};
  std::size_t index{0};  ///< vertex index for Vertex, edge index for Edge
  double optimal_value{0.0};

  /// Same maximizing set; the optimal value is not compared.
  bool same_set(const ArgmaxSet & other) const noexcept { return kind == other.kind && index == other.index; }
};

/// Maximizes f over the polygon by evaluating every vertex. Ties within eps_val·‖c‖·max‖v‖ are
/// resolved into an edge optimum when the tied vertices are adjacent.
inline ArgmaxSet argmax_enumerate(const Polygon & p, const LinearForm & f, double eps_val = 1e-9)
{
  const auto & vs = p.vertices();
  std::vector<double> values(vs.size());
  std::transform(vs.begin(), vs.end(), values.begin(), [&](const Vector2 & v) { return f(v); });
  const double best = *std::max_element(values.begin(), values.end());
  const double tol = eps_val * f.magnitude() * p.max_vertex_norm();

  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= best - tol) { tied.push_back(i); }
  }
  if (tied.size() == 1) { return {ArgmaxKind::Vertex, tied.front(), best}; }
  if (tied.size() == 2) {
    if (const auto e = p.edge_between(tied[0], tied[1])) { return {ArgmaxKind::Edge, *e, best}; }
  }
  throw Error(ErrorCode::NonAdjacentTie, "non-adjacent vertices tie for the maximum; eps_val is too large or the polygon is degenerate");
}

struct LpSolution
{
  Vector2 vertex;
  double value{0.0};
};

namespace detail {

/// Dense simplex tableau for max obj·z s.t. rows·z = rhs, z ≥ 0, with Bland's pivoting rule.
class SimplexTableau
{
public:
  SimplexTableau(std::size_t rows, std::size_t cols) : cols_(cols), t_(rows, std::vector<double>(cols + 1, 0.0)), basis_(rows) {}

  double & at(std::size_t i, std::size_t j) { return t_[i][j]; }
  double & rhs(std::size_t i) { return t_[i][cols_]; }
  std::size_t & basis(std::size_t i) { return basis_[i]; }
  std::size_t row_count() const noexcept { return t_.size(); }

  enum class Status { Optimal, Unbounded };

  /// Runs primal simplex from the current basic feasible solution. Columns with allowed[j] false
  /// never enter.
  Status optimize(const std::vector<double> & obj, const std::vector<bool> & allowed)
  {
    const std::size_t max_iterations = 50'000;
    for (std::size_t it = 0; it < max_iterations; ++it) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_ && !entering; ++j) {
        if (allowed[j] && reduced_cost(obj, j) > pivot_eps) { entering = j; }
      }
      if (!entering) { return Status::Optimal; }

      std::optional<std::size_t> leaving;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < t_.size(); ++i) {
        const double a = t_[i][*entering];
        if (a <= pivot_eps) { continue; }
        const double ratio = t_[i][cols_] / a;
        if (ratio < best_ratio - ratio_eps || (ratio <= best_ratio + ratio_eps && leaving && basis_[i] < basis_[*leaving])) {
          best_ratio = std::min(best_ratio, ratio);
          leaving = i;
        }
      }
      if (!leaving) { return Status::Unbounded; }
      pivot(*leaving, *entering);
    }
    throw Error(ErrorCode::Infeasible, "simplex iteration limit reached");
  }

  void pivot(std::size_t row, std::size_t col)
  {
    auto & pr = t_[row];
    const double p = pr[col];
    for (auto & v : pr) { v /= p; }
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == row) { continue; }
      const double factor = t_[i][col];
      if (factor == 0.0) { continue; }
      for (std::size_t j = 0; j <= cols_; ++j) { t_[i][j] -= factor * pr[j]; }
      t_[i][col] = 0.0;
    }
    basis_[row] = col;
  }

  double objective_value(const std::vector<double> & obj) const
  {
    double v = 0.0;
    for (std::size_t i = 0; i < t_.size(); ++i) { v += obj[basis_[i]] * t_[i][cols_]; }
    return v;
  }

  void erase_row(std::size_t i)
  {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  double value_of(std::size_t col) const
  {
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (basis_[i] == col) { return t_[i][cols_]; }
    }
    return 0.0;
  }

  static constexpr double pivot_eps = 1e-11;
  static constexpr double ratio_eps = 1e-12;

private:
  double reduced_cost(const std::vector<double> & obj, std::size_t j) const
  {
    double r = obj[j];
    for (std::size_t i = 0; i < t_.size(); ++i) { r -= obj[basis_[i]] * t_[i][j]; }
    return r;
  }

  std::size_t cols_;
  std::vector<std::vector<double>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Maximizes f over S with the two-phase primal simplex method (slack variables, Bland's rule).
///
/// Without implicit nonnegativity each decision variable is split into a positive and a negative
/// part. When the optimum is a whole face one of its endpoints is returned.
inline LpSolution simplex_solve(const HalfspaceSystem & h, const LinearForm & f)
{
  diagnostics::counters().simplex_solves++;
  const auto & rows = h.rows();
  const std::size_t m = rows.size();
  const bool split = !h.include_nonnegativity();
  const std::size_t n_struct = split ? 4 : 2;

  std::vector<std::size_t> art_rows;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].b < 0.0) { art_rows.push_back(i); }
  }
  const std::size_t slack0 = n_struct;
  const std::size_t art0 = slack0 + m;
  const std::size_t cols = art0 + art_rows.size();

  detail::SimplexTableau tab(m, cols);
  std::size_t next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = rows[i].b < 0.0 ? -1.0 : 1.0;
    const double a[2] = {rows[i].a1, rows[i].a2};
    for (std::size_t k = 0; k < 2; ++k) {
      if (split) {
        tab.at(i, 2 * k) = sign * a[k];
        tab.at(i, 2 * k + 1) = -sign * a[k];
      } else {
        tab.at(i, k) = sign * a[k];
      }
    }
    tab.at(i, slack0 + i) = sign;
    tab.rhs(i) = sign * rows[i].b;
    if (sign < 0.0) {
      tab.at(i, next_art) = 1.0;
      tab.basis(i) = next_art++;
    } else {
      tab.basis(i) = slack0 + i;
    }
  }

  const double rhs_scale = std::max(1.0, h.scale());

  if (!art_rows.empty()) {
    std::vector<double> phase1(cols, 0.0);
    std::fill(phase1.begin() + static_cast<std::ptrdiff_t>(art0), phase1.end(), -1.0);
    tab.optimize(phase1, std::vector<bool>(cols, true));
    if (tab.objective_value(phase1) < -1e-9 * rhs_scale) { throw Error(ErrorCode::Infeasible, "the LP is infeasible"); }

    // drive artificials that stayed basic at level zero out of the basis
    for (std::size_t i = tab.row_count(); i-- > 0;) {
      if (tab.basis(i) < art0) { continue; }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < art0 && !col; ++j) {
        if (std::abs(tab.at(i, j)) > detail::SimplexTableau::pivot_eps) { col = j; }
      }
      if (col) {
        tab.pivot(i, *col);
      } else {
        tab.erase_row(i);
      }
    }
  }

  std::vector<double> phase2(cols, 0.0);
  const double c[2] = {f.c1(), f.c2()};
  for (std::size_t k = 0; k < 2; ++k) {
    if (split) {
      phase2[2 * k] = c[k];
      phase2[2 * k + 1] = -c[k];
    } else {
      phase2[k] = c[k];
    }
  }
  std::vector<bool> allowed(cols, true);
  std::fill(allowed.begin() + static_cast<std::ptrdiff_t>(art0), allowed.end(), false);
  if (tab.optimize(phase2, allowed) == detail::SimplexTableau::Status::Unbounded) {
    throw Error(ErrorCode::Unbounded, "the LP is unbounded in the objective direction");
  }

  const Vector2 x = split ? Vector2{tab.value_of(0) - tab.value_of(1), tab.value_of(2) - tab.value_of(3)}
                          : Vector2{tab.value_of(0), tab.value_of(1)};
  return {x, f(x)};
}

}  // namespace molfan
