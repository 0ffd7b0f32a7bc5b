#pragma once

#include <string>
#include <vector>

#include "torsion/chain.hpp"
#include "torsion/stability.hpp"

namespace torsion {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};
using CheckList = std::vector<CheckResult>;

bool all_passed(const CheckList& list);

// Invariant suites, shared by `check --suite ...` and the acceptance runner.
// n_max bounds the quiver sizes exercised, dim_bound the module dimensions
// fed to the gf2 oracle.
CheckList suite_core(int n_max = 4, int dim_bound = 6);
CheckList suite_stability(int n_max = 3, int dim_bound = 6);
CheckList suite_metric(int n_max = 3, int dim_bound = 6);
CheckList suite_chambers(int n_max = 3, int dim_bound = 6);
CheckList suite_all(int n_max = 3, int dim_bound = 6);

// The acceptance gate: fixed parameters, one entry per criterion.
CheckList acceptance_criteria();

// All chains with at most max_classes classes and breakpoints on the grid
// { k/grid_den : 0 <= k <= grid_den }, strictly increasing.
std::vector<Chain> grid_chains(const TorsLattice& l, int max_classes, int grid_den);

// Deterministic pseudo-random canonical chains (breakpoints on a fine grid).
std::vector<Chain> random_chains(const TorsLattice& l, int count, unsigned seed,
                                 int grid_den = 24);

}  // namespace torsion
