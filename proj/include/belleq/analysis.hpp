#pragma once

#include <optional>
#include <string>

#include "belleq/bell.hpp"
#include "belleq/quantum.hpp"

namespace belleq {

// Derived metrics for one (expression, settings) pair. For equality pairs
// the complement fixes the local benchmark; both tolerance readings are
// reported side by side.
struct AnalysisReport {
    std::string expression_name;
    double quantum_value = 0.0;
    LocalBounds bounds;
    std::optional<double> violated_bound;
    double violation_amount = 0.0;
    double violation_range = 0.0;
    std::optional<double> violation_factor;
    std::optional<double> tolerance_inequality;
    std::optional<double> tolerance_equality_pinned;
    std::optional<double> tolerance_equality_strict;
};

// Amount by which the quantum value escapes the local interval:
// max(0, value - upper, lower - value).
double violation_amount(const BellExpression& expr, const QuantumSettings& s);

// For a complement pair the local value is pinned at 1 - |<ec>|; the
// violation is the gap between <e> and that benchmark.
double violation_amount_equality(const BellExpression& e, const BellExpression& ec,
                                 const QuantumSettings& s);

// upper - lower.
double violation_range(const BellExpression& expr);

// Local benchmark 1 - |<complement>| used as the range of an equality.
double violation_range_equality(const BellExpression& complement,
                                const QuantumSettings& s);

// eta = (delta + R) / R; R must be positive.
double violation_factor(double delta, double range);

// Closed-form white-noise fraction at which the noisy value meets the
// violated bound. Throws std::domain_error if nothing is violated at p=0
// or the trajectory is degenerate; returns 1 if it never crosses.
double inequality_tolerance(const BellExpression& expr, const QuantumSettings& s);

// Noise fraction at which the noisy value of e meets the fixed noiseless
// benchmark 1 - |<ec>|. Requires verify_complement(e, ec) and <ec> < 0.
double equality_tolerance_pinned(const BellExpression& e, const BellExpression& ec,
                                 const QuantumSettings& s);

// Noise fraction at which the noisy complement changes sign. Requires
// <ec> <= 0; returns 1 if the sign never changes on [0, 1].
double equality_tolerance_strict(const BellExpression& ec, const QuantumSettings& s);

// Full report; pass the complement to get the equality metrics.
AnalysisReport analyze(const BellExpression& expr, const QuantumSettings& s,
                       const BellExpression* complement = nullptr);

}  // namespace belleq
