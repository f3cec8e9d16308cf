#pragma once

#include "molfan/geometry.hpp"

namespace molfan {

/// Numerical tolerances shared by every stage. Geometric and value tolerances are relative and get
/// multiplied by a problem scale at the point of use; the angular tolerance is absolute (radians).
struct Tolerances
{
  double eps_geom{1e-9};
  double eps_val{1e-9};
  double eps_angle{default_eps_angle};
};

}  // namespace molfan
