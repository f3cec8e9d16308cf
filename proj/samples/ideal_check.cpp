// Decides whether a few objectives over one feasible region share an optimal corner, then
// confirms the verdict by checking the objectives at every vertex.

#include <iostream>
#include <variant>

#include "molfan/molfan.hpp"

int main()
{
  using namespace molfan;

  // x1/4 + x2/2 <= 40, 2x1/5 + x2/5 <= 40, 4x2/5 <= 40, x >= 0
  const HalfspaceSystem system({{0.25, 0.5, 40.0}, {0.4, 0.2, 40.0}, {0.0, 0.8, 40.0}});
  const MolppInstance agreeing(system, {LinearForm(2, 3), LinearForm(1, 1), LinearForm(3, 4)});
  const MolppInstance conflicting(system, {LinearForm(2, 3), LinearForm(1, 0)});

  for (const auto * inst : {&agreeing, &conflicting}) {
    const ClassificationReport report = classify_instance(*inst);
    if (const auto * v = std::get_if<IdealVertex>(&report.verdict)) {
      std::cout << "ideal vertex (" << v->point.x1 << ", " << v->point.x2 << "), verified: " << std::boolalpha
                << verify_ideal(*inst, v->point) << "\n";
    } else {
      std::cout << "no ideal solution; objectives fall into " << report.groups.size() << " classes\n";
    }
  }

  const QuotientSet fan = build_fan(build_polygon(system));
  const AngularInterval cone = sensitivity_interval(fan, class_of(fan, LinearForm(2, 3)).corner().vertex_index);
  std::cout << "directions keeping (80, 40) optimal: (" << cone.lo().degrees() << ", " << cone.hi().degrees() << ") deg\n";
}
