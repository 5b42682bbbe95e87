#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "belleq/scenario.hpp"

namespace belleq {

enum class Party { Alice, Bob };

// One term lambda * P_{ab}^{ij} of a Bell expression.
struct BellTerm {
    int a = 1;  // setting, 1-based
    int b = 1;
    int i = 0;  // outcome, 0-based
    int j = 0;
    double coefficient = 0.0;

    auto key() const { return std::tuple(a, b, i, j); }
};

// Sparse linear form over joint probabilities. Zero coefficients are
// dropped; duplicate (a,b,i,j) keys are rejected.
class BellExpression {
public:
    BellExpression(Scenario scn, std::vector<BellTerm> terms, std::string name = "");

    const Scenario& scenario() const { return scenario_; }
    const std::string& name() const { return name_; }
    const std::vector<BellTerm>& terms() const { return terms_; }

    double coefficient(int a, int b, int i, int j) const;

private:
    Scenario scenario_;
    std::vector<BellTerm> terms_;  // sorted by key
    std::string name_;
};

// Net coefficient of each gamma entry after pulling the expression back
// through the marginalization map.
struct GammaCoefficients {
    Scenario scenario;
    std::vector<double> values;

    explicit GammaCoefficients(const Scenario& scn)
        : scenario(scn), values(scn.gamma_dimension(), 0.0) {}

    double at(int i1, int i2, int j1, int j2) const {
        return values[scenario.gamma_index(i1, i2, j1, j2)];
    }
};

struct LocalBounds {
    double lower = 0.0;
    double upper = 0.0;

    bool operator==(const LocalBounds&) const = default;
};

// <lambda, P>
double evaluate(const BellExpression& expr, const PVector& p);

// <coefficients, gamma>
double contract(const GammaCoefficients& coeffs, const GammaTensor& gamma);

// Pull the expression's coefficients back to gamma space: each term
// lambda_{abij} contributes lambda to every gamma with i_a = i, j_b = j.
GammaCoefficients gamma_coefficients(const BellExpression& expr);

// Extrema of the full gamma-coefficient tensor, implicit zeros included.
// These are the exact local-theory bounds, attained at point masses.
LocalBounds local_bounds(const BellExpression& expr);

// Same bounds by exhaustive scan over deterministic strategies.
LocalBounds local_bounds_enumerated(const BellExpression& expr);

// Bounds equal (0, 1) within tol.
bool is_formal(const BellExpression& expr, double tol = 1e-12);

// 1 - gamma_coefficients(expr). Requires a formal expression whose gamma
// coefficients are all 0 or 1; throws std::domain_error otherwise.
GammaCoefficients complement_gamma(const BellExpression& expr);

// True iff the two expressions' gamma coefficients sum to the all-ones
// tensor within tol. Scenario mismatch throws std::domain_error.
bool verify_complement(const BellExpression& e1, const BellExpression& e2,
                       double tol = 1e-12);

// Lift the expression into the scenario where the given (party, setting)
// outcome count is one larger. The split outcome keeps its index and is
// duplicated onto the new last index with the same coefficient.
BellExpression split_outcome(const BellExpression& expr, Party party, int setting,
                             int outcome);

// Sum of all term coefficients.
double lambda_sum(const BellExpression& expr);

}  // namespace belleq
