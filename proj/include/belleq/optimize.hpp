#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "belleq/bell.hpp"
#include "belleq/quantum.hpp"

namespace belleq {

enum class Objective {
    QuantumValue,     // maximize <lambda, table>
    Violation,        // maximize the distance past the nearest local bound
    TolerancePinned,  // maximize the white-noise tolerance (pinned benchmark)
};

struct OptimizationConfig {
    Objective objective = Objective::Violation;
    bool free_state = true;
    bool free_alpha = true;
    bool free_beta = true;
    int restarts = 20;
    int max_iterations = 4000;  // simplex iterations per restart
    std::uint64_t seed = 1;
    double tolerance = 1e-10;  // convergence on objective change
    bool parallel = false;
    bool record_trace = false;
    // Supplies the pinned blocks and the refinement start; defaults to the
    // maximally entangled state with zero phases.
    std::optional<QuantumSettings> base;
};

struct OptimizationResult {
    QuantumSettings best_settings;
    double best_objective = 0.0;
    long iterations_used = 0;  // in the winning restart
    int restart_index = 0;
    bool violation_found = false;
    std::vector<std::pair<long, double>> trace;  // best-so-far per iteration
};

// The reported (clamped, nonnegative for violation/tolerance) objective of
// a settings point. Returns 0 where the metric is unavailable, e.g. the
// tolerance of a non-violating point.
double objective_value(const BellExpression& expr, const BellExpression* complement,
                       Objective objective, const QuantumSettings& s);

// Derivative-free search: `restarts` independent simplex descents from
// seeded random starting points. State coefficients are renormalized onto
// the unit sphere before every evaluation; phases are wrapped modulo D.
// Deterministic given (seed, config); restart k draws from seed ^ k.
OptimizationResult maximize(const BellExpression& expr,
                            const BellExpression* complement,
                            const OptimizationConfig& config);

// Single local search started at `start`. Never returns an objective below
// the start's; with max_iterations == 0 it returns the start unchanged.
OptimizationResult refine(const BellExpression& expr, const BellExpression* complement,
                          const QuantumSettings& start,
                          const OptimizationConfig& config);

}  // namespace belleq
