#include "belleq/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace belleq {

namespace {

constexpr double kViolationEps = 1e-12;

double white_noise_value(const BellExpression& expr, const QuantumSettings& s) {
    const double D2 = static_cast<double>(s.dimension) * s.dimension;
    return lambda_sum(expr) / D2;
}

}  // namespace

double violation_amount(const BellExpression& expr, const QuantumSettings& s) {
    const LocalBounds b = local_bounds(expr);
    const double v = quantum_value(expr, s);
    return std::max({0.0, v - b.upper, b.lower - v});
}

double violation_amount_equality(const BellExpression& e, const BellExpression& ec,
                                 const QuantumSettings& s) {
    const double benchmark = 1.0 - std::abs(quantum_value(ec, s));
    return std::abs(quantum_value(e, s) - benchmark);
}

double violation_range(const BellExpression& expr) {
    const LocalBounds b = local_bounds(expr);
    return b.upper - b.lower;
}

double violation_range_equality(const BellExpression& complement,
                                const QuantumSettings& s) {
    return 1.0 - std::abs(quantum_value(complement, s));
}

double violation_factor(double delta, double range) {
    if (!(range > 0.0)) throw std::domain_error("violation range must be positive");
    return (delta + range) / range;
}

double inequality_tolerance(const BellExpression& expr, const QuantumSettings& s) {
    const LocalBounds b = local_bounds(expr);
    const double v = quantum_value(expr, s);
    double bound;
    if (v > b.upper + kViolationEps) {
        bound = b.upper;
    } else if (v < b.lower - kViolationEps) {
        bound = b.lower;
    } else {
        throw std::domain_error("no violation at p = 0");
    }
    const double white = white_noise_value(expr, s);
    if (std::abs(v - white) < kViolationEps)
        throw std::domain_error("white-noise value equals the quantum value; no crossing");
    const double p = (v - bound) / (v - white);
    // the white-noise end is still violating: mixing never restores locality
    if (p < 0.0 || p > 1.0) return 1.0;
    return p;
}

double equality_tolerance_pinned(const BellExpression& e, const BellExpression& ec,
                                 const QuantumSettings& s) {
    if (!verify_complement(e, ec))
        throw std::domain_error("expressions are not a complement pair");
    const double vc = quantum_value(ec, s);
    if (vc >= 0.0)
        throw std::domain_error("complement quantum value must be negative");
    const double benchmark = 1.0 - std::abs(vc);
    const double v = quantum_value(e, s);
    const double white = white_noise_value(e, s);
    if (std::abs(v - white) < kViolationEps)
        throw std::domain_error("white-noise value equals the quantum value; no crossing");
    const double p = (v - benchmark) / (v - white);
    if (p < 0.0 || p > 1.0) return 1.0;
    return p;
}

double equality_tolerance_strict(const BellExpression& ec, const QuantumSettings& s) {
    const double vc = quantum_value(ec, s);
    if (vc > kViolationEps)
        throw std::domain_error("complement quantum value must be nonpositive");
    if (vc >= 0.0) return 0.0;
    const double white = white_noise_value(ec, s);
    const double denom = white - vc;
    if (denom <= kViolationEps) return 1.0;  // no sign change on [0, 1]
    const double p = -vc / denom;
    return p > 1.0 ? 1.0 : p;
}

AnalysisReport analyze(const BellExpression& expr, const QuantumSettings& s,
                       const BellExpression* complement) {
    AnalysisReport r;
    r.expression_name = expr.name();
    r.bounds = local_bounds(expr);
    r.quantum_value = quantum_value(expr, s);

    if (complement != nullptr) {
        r.violation_amount = violation_amount_equality(expr, *complement, s);
        r.violation_range = violation_range_equality(*complement, s);
        if (r.violation_amount > kViolationEps)
            r.violated_bound = 1.0 - std::abs(quantum_value(*complement, s));
        try {
            r.tolerance_equality_pinned = equality_tolerance_pinned(expr, *complement, s);
        } catch (const std::domain_error&) {
        }
        try {
            r.tolerance_equality_strict = equality_tolerance_strict(*complement, s);
        } catch (const std::domain_error&) {
        }
    } else {
        r.violation_amount = violation_amount(expr, s);
        r.violation_range = violation_range(expr);
        if (r.quantum_value > r.bounds.upper + kViolationEps)
            r.violated_bound = r.bounds.upper;
        else if (r.quantum_value < r.bounds.lower - kViolationEps)
            r.violated_bound = r.bounds.lower;
    }
    try {
        r.tolerance_inequality = inequality_tolerance(expr, s);
    } catch (const std::domain_error&) {
    }
    if (r.violation_range > 0.0)
        r.violation_factor = violation_factor(r.violation_amount, r.violation_range);
    return r;
}

}  // namespace belleq
