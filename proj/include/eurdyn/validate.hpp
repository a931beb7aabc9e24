#pragma once

#include <string>
#include <vector>

namespace eurdyn {

// One self-check outcome. worst is the largest deviation the check observed (its
// exact meaning is check-specific: a max absolute difference, a relative error, or a
// floor violation), tol is the threshold it was held against.
struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;
    double tol = 0.0;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

// Cross-checks independent formulations of the same quantities against each other:
// the closed-form propagator against a brute-force integrator, the similarity-mapped
// unitary image, the closed-form densities and outcome distributions, plus invariants
// (uncertainty floor, determinant identity, density trace and purity).
// full=false is a coarse pass (finishes in a few seconds); full=true uses the finer
// integrator step, longer horizons, and denser grids.
ValidationReport run_validation(bool full);

} // namespace eurdyn
