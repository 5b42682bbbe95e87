#include "belleq/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace belleq {

QuantumSettings::QuantumSettings(int D, std::vector<std::complex<double>> C,
                                 std::array<double, 2> alpha_,
                                 std::array<double, 2> beta_)
    : dimension(D), coefficients(std::move(C)), alpha(alpha_), beta(beta_) {
    if (D < 2) throw std::domain_error("dimension must be >= 2");
    if (coefficients.size() != static_cast<std::size_t>(D) * D)
        throw std::domain_error("coefficient matrix must be D x D");
}

QuantumSettings QuantumSettings::maximally_entangled(int D) {
    std::vector<std::complex<double>> C(static_cast<std::size_t>(D) * D, 0.0);
    const double w = 1.0 / std::sqrt(static_cast<double>(D));
    for (int j = 0; j < D; ++j) C[static_cast<std::size_t>(j) * D + j] = w;
    return QuantumSettings(D, std::move(C), {0.0, 0.0}, {0.0, 0.0});
}

NoiseModel::NoiseModel(double p_) : p(p_) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("noise fraction outside [0,1]");
}

bool validate_settings(const QuantumSettings& s, double tol) {
    double sum = 0.0;
    for (const auto& c : s.coefficients) sum += std::norm(c);
    return std::abs(sum - 1.0) <= tol;
}

double joint_probability(const QuantumSettings& s, int a, int b, int m, int n) {
    const int D = s.dimension;
    if (a != 1 && a != 2) throw std::out_of_range("setting a must be 1 or 2");
    if (b != 1 && b != 2) throw std::out_of_range("setting b must be 1 or 2");
    if (m < 0 || m >= D || n < 0 || n >= D)
        throw std::out_of_range("measurement outcome out of range");
    const double alpha = s.alpha[a - 1];
    const double beta = s.beta[b - 1];
    const double w = 2.0 * std::numbers::pi / D;
    std::complex<double> amp = 0.0;
    for (int j = 0; j < D; ++j)
        for (int k = 0; k < D; ++k) {
            const double phase = w * ((alpha + m) * j + (beta - n) * k);
            amp += s.C(j, k) * std::polar(1.0, phase);
        }
    return std::norm(amp) / (static_cast<double>(D) * D);
}

PVector probability_table(const QuantumSettings& s) {
    if (!validate_settings(s)) throw std::domain_error("state is not normalized");
    const int D = s.dimension;
    const Scenario scn(D, D, D, D);
    PVector p(scn);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int m = 0; m < D; ++m)
                for (int n = 0; n < D; ++n)
                    p.at(a, b, m, n) = joint_probability(s, a, b, m, n);
    return p;
}

double quantum_value(const BellExpression& expr, const QuantumSettings& s) {
    const Scenario& scn = expr.scenario();
    const int D = s.dimension;
    if (scn.l1 != D || scn.l2 != D || scn.r1 != D || scn.r2 != D)
        throw std::domain_error("expression outcome counts must all equal the dimension");
    return evaluate(expr, probability_table(s));
}

double noisy_value(const BellExpression& expr, const QuantumSettings& s,
                   const NoiseModel& noise) {
    const double D2 = static_cast<double>(s.dimension) * s.dimension;
    const double white = lambda_sum(expr) / D2;
    return noise.p * white + (1.0 - noise.p) * quantum_value(expr, s);
}

}  // namespace belleq
