#pragma once

#include <array>
#include <complex>
#include <vector>

#include "belleq/bell.hpp"
#include "belleq/scenario.hpp"

namespace belleq {

// State coefficients C_{jk} (row-major D x D) plus the per-setting phase
// offsets entering the Fourier-transformed measurement basis.
struct QuantumSettings {
    int dimension = 2;
    std::vector<std::complex<double>> coefficients;  // row-major, D*D
    std::array<double, 2> alpha = {0.0, 0.0};        // Alice settings a=1,2
    std::array<double, 2> beta = {0.0, 0.0};         // Bob settings b=1,2

    QuantumSettings() = default;
    QuantumSettings(int D, std::vector<std::complex<double>> C,
                    std::array<double, 2> alpha_, std::array<double, 2> beta_);

    std::complex<double> C(int j, int k) const {
        return coefficients[static_cast<std::size_t>(j) * dimension + k];
    }

    // Maximally entangled state diag(1/sqrt(D)) with zero phases.
    static QuantumSettings maximally_entangled(int D);
};

// White-noise fraction of a Werner mixture.
struct NoiseModel {
    double p = 0.0;

    NoiseModel() = default;
    explicit NoiseModel(double p_);
};

// Sum of squared moduli of C equals 1 within tol.
bool validate_settings(const QuantumSettings& s, double tol = 1e-10);

// P_{ab}^{mn} = (1/D^2) |sum_{jk} C_{jk} exp((2*pi*i/D)[(alpha_a+m) j + (beta_b-n) k])|^2
double joint_probability(const QuantumSettings& s, int a, int b, int m, int n);

// All 4*D^2 joint probabilities in the uniform-D scenario.
PVector probability_table(const QuantumSettings& s);

// <lambda, probability_table(s)>. The expression's outcome counts must all
// equal the state dimension.
double quantum_value(const BellExpression& expr, const QuantumSettings& s);

// Werner mixture at the probability level: white noise sends every joint
// probability to 1/D^2, so the value is affine in p.
double noisy_value(const BellExpression& expr, const QuantumSettings& s,
                   const NoiseModel& noise);

}  // namespace belleq
