#pragma once

// Weight-by-weight exact solver for the truncated extended double shuffle
// system: at weight w the unknowns are the depth >= 2 indices of weight w;
// stuffle symmetrility rows and shuffle symmetrality rows for Z_gamma are
// affine-linear in them, and the system is solved by exact elimination.
// Free columns are pinned (to zero unless overridden) under the documented
// basis order: depth ascending, then lexicographic on the index.

#include "cmes/beta_solution.hpp"
#include "cmes/mould_checks.hpp"

#include <map>
#include <vector>

namespace cmes {

struct EdsOptions {
    // values for free parameters by basis index; anything not listed is 0
    std::map<std::vector<int>, Rational> free_assignments;
};

// Throws std::runtime_error if any weight's system is inconsistent (that
// would mean an assembly bug: solutions are known to exist).
BetaSolution solve_eds(int weight_max, int depth_max, const EdsOptions& opts = {});

// Independently re-checks every constraint on the stored values, plus the
// depth-two generating-series displays of both product families.
CheckFailure verify_eds(const BetaSolution& beta, int weight_max, int depth_max);

}  // namespace cmes
