#pragma once

#include "belleq/scenario.hpp"

namespace belleq {

// Three-way count of independent joint probabilities. The two closed-form
// counts disagree by one for every two-setting scenario; the numeric
// affine dimension adjudicates.
struct DimensionReport {
    Scenario scenario;
    int count_formula = 0;           // (l1+l2)(r1+r2) - (l1+l2+r1+r2-1)
    int count_parameterization = 0;  // marginal-basis parameter count
    int affine_dimension = 0;        // rank of centered strategy matrix
    int constraint_rank = 0;         // rank of normalization + no-signaling rows
    int p_dimension = 0;
};

// Closed-form count that treats one of the normalization/no-signaling
// constraints as dependent.
int independent_count_formula(const Scenario& scn);

// Count of free parameters in the marginals-plus-joints parameterization:
// (sum_a (l_a-1)) * (sum_b (r_b-1)) + sum_a (l_a-1) + sum_b (r_b-1).
int independent_count_parameterization(const Scenario& scn);

// Dimension of the affine hull of the deterministic-strategy vectors,
// via SVD rank with a 1e-9 relative cutoff. Throws std::runtime_error for
// scenarios with more than 10^4 strategies.
int affine_dimension(const Scenario& scn);

// Numeric rank of the stacked constraint system: one normalization row per
// setting pair and one no-signaling row per (party, setting, outcome).
int constraint_rank(const Scenario& scn);

DimensionReport dimension_report(const Scenario& scn);

}  // namespace belleq
