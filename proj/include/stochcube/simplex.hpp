#pragma once

#include <vector>

#include "stochcube/rational.hpp"

namespace stochcube {

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> solution;  // empty when infeasible
};

// Decides whether {x >= 0 : m x = rhs} is nonempty by phase-1 simplex with
// Bland's rule over exact rationals. Bland's rule excludes cycling, so the
// method terminates on every input; redundant or inconsistent rows are
// handled by the artificial variables. On success the returned solution
// satisfies the system exactly.
FeasibilityResult solve_equality_feasibility(std::vector<std::vector<Rational>> m,
                                             std::vector<Rational> rhs);

}  // namespace stochcube
