#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "molfan/error.hpp"
#include "molfan/fan.hpp"
#include "molfan/lp.hpp"
#include "molfan/polytope.hpp"
#include "molfan/tolerances.hpp"

namespace molfan {

/// K ≥ 1 linear objectives to be maximized simultaneously over one feasible region.
class MolppInstance
{
public:
  MolppInstance(HalfspaceSystem system, std::vector<LinearForm> objectives)
      : system_(std::move(system)), objectives_(std::move(objectives))
  {
    if (objectives_.empty()) { throw Error(ErrorCode::InvalidSystem, "a multiobjective problem needs at least one objective"); }
  }

  const HalfspaceSystem & system() const noexcept { return system_; }
  const std::vector<LinearForm> & objectives() const noexcept { return objectives_; }
  std::size_t objective_count() const noexcept { return objectives_.size(); }

private:
  HalfspaceSystem system_;
  std::vector<LinearForm> objectives_;
};

struct ObjectiveAssignment
{
  std::size_t objective{0};
  std::size_t class_id{0};
  ClassKind kind{ClassKind::Corner};
  std::size_t element_index{0};  ///< vertex index for corners, edge index for faces
  Angle direction{};
};

struct IdealVertex
{
  std::size_t vertex_index{0};
  Vector2 point;
};

/// Every point of the edge maximizes all objectives.
struct IdealFace
{
  std::size_t edge_index{0};
  Vector2 tail;
  Vector2 head;
};

struct NoIdeal
{};

using Verdict = std::variant<IdealVertex, IdealFace, NoIdeal>;

struct ClassificationReport
{
  QuotientSet fan;
  std::vector<ObjectiveAssignment> per_objective;
  std::map<std::size_t, std::vector<std::size_t>> groups;  ///< class id -> objective indices
  Verdict verdict;

  bool has_ideal() const noexcept { return !std::holds_alternative<NoIdeal>(verdict); }
};

/// Classifies every objective by cone lookup in a single fan and decides whether an ideal solution
/// exists: it does exactly when all objectives land in one class.
inline ClassificationReport classify_instance(const MolppInstance & inst, const Tolerances & tol = {})
{
  QuotientSet fan = build_fan(build_polygon(inst.system(), tol.eps_geom), FanOptions{true, tol.eps_angle});

  std::vector<ObjectiveAssignment> assignments;
  std::map<std::size_t, std::vector<std::size_t>> groups;
  assignments.reserve(inst.objective_count());
  for (std::size_t k = 0; k < inst.objective_count(); ++k) {
    const LinearForm & f = inst.objectives()[k];
    const EquivalenceClass & cls = class_of(fan, f);
    const std::size_t element = cls.is_corner() ? cls.corner().vertex_index : cls.face().edge_index;
    assignments.push_back({k, cls.class_id, cls.kind_tag(), element, f.direction()});
    groups[cls.class_id].push_back(k);
  }

  Verdict verdict = NoIdeal{};
  if (groups.size() == 1) {
    const EquivalenceClass & shared = fan[groups.begin()->first];
    const auto & vs = fan.polygon().vertices();
    if (shared.is_corner()) {
      verdict = IdealVertex{shared.corner().vertex_index, vs[shared.corner().vertex_index]};
    } else {
      const Edge & e = fan.polygon().edges()[shared.face().edge_index];
      verdict = IdealFace{shared.face().edge_index, vs[e.tail_index], vs[e.head_index]};
    }
  }
  return {std::move(fan), std::move(assignments), std::move(groups), verdict};
}

/// Checks the ideal-solution definition directly: every objective is at least as large at the
/// candidate as at every vertex, which by linearity covers the whole polygon.
inline bool verify_ideal(const HalfspaceSystem & system, const Polygon & polygon, const std::vector<LinearForm> & objectives,
                         const Vector2 & candidate, const Tolerances & tol = {})
{
  const double geom_tol = tol.eps_geom * system.scale();
  if (!detail::satisfies_all(system.all_rows(), candidate, geom_tol)) {
    throw Error(ErrorCode::InfeasibleCandidate, "candidate point is not feasible");
  }
  const double reach = std::max(polygon.max_vertex_norm(), norm(candidate));
  return std::all_of(objectives.begin(), objectives.end(), [&](const LinearForm & f) {
    const double slack = tol.eps_val * f.magnitude() * reach;
    const double at_candidate = f(candidate);
    return std::all_of(polygon.vertices().begin(), polygon.vertices().end(),
                       [&](const Vector2 & v) { return at_candidate >= f(v) - slack; });
  });
}

inline bool verify_ideal(const MolppInstance & inst, const Vector2 & candidate, const Tolerances & tol = {})
{
  return verify_ideal(inst.system(), build_polygon(inst.system(), tol.eps_geom), inst.objectives(), candidate, tol);
}

}  // namespace molfan
