#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace belleq {

// Two-party measurement scenario with two settings per side.
// l1, l2 are Alice's outcome counts for settings a=1,2; r1, r2 are Bob's
// for b=1,2. Settings are 1-based throughout the API, outcomes 0-based.
struct Scenario {
    int l1 = 2;
    int l2 = 2;
    int r1 = 2;
    int r2 = 2;

    Scenario() = default;
    Scenario(int l1_, int l2_, int r1_, int r2_);

    int alice_outcomes(int a) const;  // a in {1,2}
    int bob_outcomes(int b) const;    // b in {1,2}

    // Number of joint-probability coordinates: sum of l_a * r_b over the
    // four setting pairs.
    int p_dimension() const { return l1 * r1 + l1 * r2 + l2 * r1 + l2 * r2; }

    // Number of outcome quadruples (i1, i2, j1, j2).
    std::size_t gamma_dimension() const {
        return static_cast<std::size_t>(l1) * l2 * r1 * r2;
    }

    // Canonical flat index of P_{ab}^{ij}: a-major, then b, then i, then j.
    std::size_t p_index(int a, int b, int i, int j) const;

    // Flat index of gamma_{i1 i2 j1 j2} (i1-major).
    std::size_t gamma_index(int i1, int i2, int j1, int j2) const;

    // Inverse of gamma_index.
    std::array<int, 4> gamma_unindex(std::size_t flat) const;

    bool operator==(const Scenario&) const = default;

    std::string label() const;  // e.g. "<33|33>"
};

// One fixed outcome per (party, setting); the extreme points of the
// local-hidden-variable model.
struct DeterministicStrategy {
    int i1 = 0;
    int i2 = 0;
    int j1 = 0;
    int j2 = 0;

    bool operator==(const DeterministicStrategy&) const = default;
};

// Distribution (or coefficient tensor) over outcome quadruples, stored
// dense in gamma_index order.
struct GammaTensor {
    Scenario scenario;
    std::vector<double> values;

    explicit GammaTensor(const Scenario& scn)
        : scenario(scn), values(scn.gamma_dimension(), 0.0) {}
    GammaTensor(const Scenario& scn, std::vector<double> vals);

    double& at(int i1, int i2, int j1, int j2) {
        return values[scenario.gamma_index(i1, i2, j1, j2)];
    }
    double at(int i1, int i2, int j1, int j2) const {
        return values[scenario.gamma_index(i1, i2, j1, j2)];
    }

    // Entries nonnegative and summing to 1 within tol.
    bool is_distribution(double tol = 1e-12) const;
};

// Joint probabilities P_{ab}^{ij} in canonical (a, b, i, j) order.
struct PVector {
    Scenario scenario;
    std::vector<double> values;

    explicit PVector(const Scenario& scn)
        : scenario(scn), values(static_cast<std::size_t>(scn.p_dimension()), 0.0) {}
    PVector(const Scenario& scn, std::vector<double> vals);

    double& at(int a, int b, int i, int j) {
        return values[scenario.p_index(a, b, i, j)];
    }
    double at(int a, int b, int i, int j) const {
        return values[scenario.p_index(a, b, i, j)];
    }
};

// All l1*l2*r1*r2 strategies in lexicographic (i1, i2, j1, j2) order.
std::vector<DeterministicStrategy> enumerate_strategies(const Scenario& scn);

// Point-mass gamma at the strategy's outcome quadruple.
GammaTensor strategy_to_gamma(const DeterministicStrategy& s, const Scenario& scn);

// Marginalize the two suppressed settings: P_{ab}^{ij} is the sum of all
// gamma entries with i_a = i and j_b = j.
PVector gamma_to_p(const GammaTensor& gamma);

// gamma_to_p(strategy_to_gamma(s)), computed directly; entries are 0/1.
PVector strategy_to_p(const DeterministicStrategy& s, const Scenario& scn);

// The gamma quadruples contributing to P_{ab}^{ij}, in index order. This
// regenerates the expansion tables that are usually printed by hand.
std::vector<std::array<int, 4>> gamma_support(const Scenario& scn, int a, int b,
                                              int i, int j);

}  // namespace belleq
