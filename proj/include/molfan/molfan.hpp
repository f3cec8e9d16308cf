#pragma once

#include "molfan/error.hpp"
#include "molfan/fan.hpp"
#include "molfan/geometry.hpp"
#include "molfan/lp.hpp"
#include "molfan/molpp.hpp"
#include "molfan/polytope.hpp"
#include "molfan/problem_file.hpp"
#include "molfan/tolerances.hpp"
