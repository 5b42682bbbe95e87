#include "belleq/bell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace belleq {

BellExpression::BellExpression(Scenario scn, std::vector<BellTerm> terms,
                               std::string name)
    : scenario_(scn), name_(std::move(name)) {
    for (const BellTerm& t : terms) {
        scenario_.p_index(t.a, t.b, t.i, t.j);  // validates indices
        if (t.coefficient != 0.0) terms_.push_back(t);
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const BellTerm& x, const BellTerm& y) { return x.key() < y.key(); });
    for (std::size_t k = 1; k < terms_.size(); ++k)
        if (terms_[k].key() == terms_[k - 1].key())
            throw std::invalid_argument("duplicate expression term");
}

double BellExpression::coefficient(int a, int b, int i, int j) const {
    const auto key = std::tuple(a, b, i, j);
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), key,
        [](const BellTerm& t, const std::tuple<int, int, int, int>& k) {
            return t.key() < k;
        });
    return (it != terms_.end() && it->key() == key) ? it->coefficient : 0.0;
}

double evaluate(const BellExpression& expr, const PVector& p) {
    if (!(expr.scenario() == p.scenario))
        throw std::domain_error("expression and p-vector scenarios differ");
    double sum = 0.0;
    for (const BellTerm& t : expr.terms())
        sum += t.coefficient * p.at(t.a, t.b, t.i, t.j);
    return sum;
}

double contract(const GammaCoefficients& coeffs, const GammaTensor& gamma) {
    if (!(coeffs.scenario == gamma.scenario))
        throw std::domain_error("coefficient and gamma scenarios differ");
    double sum = 0.0;
    for (std::size_t k = 0; k < coeffs.values.size(); ++k)
        sum += coeffs.values[k] * gamma.values[k];
    return sum;
}

GammaCoefficients gamma_coefficients(const BellExpression& expr) {
    const Scenario& scn = expr.scenario();
    GammaCoefficients g(scn);
    for (const BellTerm& t : expr.terms()) {
        for (const auto& idx : gamma_support(scn, t.a, t.b, t.i, t.j))
            g.values[scn.gamma_index(idx[0], idx[1], idx[2], idx[3])] += t.coefficient;
    }
    return g;
}

LocalBounds local_bounds(const BellExpression& expr) {
    const GammaCoefficients g = gamma_coefficients(expr);
    double lo = g.values[0];
    double hi = g.values[0];
    for (double v : g.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

LocalBounds local_bounds_enumerated(const BellExpression& expr) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const DeterministicStrategy& s : enumerate_strategies(expr.scenario())) {
        const double v = evaluate(expr, strategy_to_p(s, expr.scenario()));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

bool is_formal(const BellExpression& expr, double tol) {
    const LocalBounds b = local_bounds(expr);
    return std::abs(b.lower) <= tol && std::abs(b.upper - 1.0) <= tol;
}

GammaCoefficients complement_gamma(const BellExpression& expr) {
    if (!is_formal(expr))
        throw std::domain_error("complement requires a formal expression");
    GammaCoefficients g = gamma_coefficients(expr);
    for (double& v : g.values) {
        if (std::abs(v) > 1e-12 && std::abs(v - 1.0) > 1e-12)
            throw std::domain_error("complement requires 0/1 gamma coefficients");
        v = 1.0 - v;
    }
    return g;
}

bool verify_complement(const BellExpression& e1, const BellExpression& e2, double tol) {
    if (!(e1.scenario() == e2.scenario()))
        throw std::domain_error("complement pair must share a scenario");
    const GammaCoefficients g1 = gamma_coefficients(e1);
    const GammaCoefficients g2 = gamma_coefficients(e2);
    for (std::size_t k = 0; k < g1.values.size(); ++k)
        if (std::abs(g1.values[k] + g2.values[k] - 1.0) > tol) return false;
    return true;
}

BellExpression split_outcome(const BellExpression& expr, Party party, int setting,
                             int outcome) {
    const Scenario& old = expr.scenario();
    const int count = (party == Party::Alice) ? old.alice_outcomes(setting)
                                              : old.bob_outcomes(setting);
    if (outcome < 0 || outcome >= count)
        throw std::out_of_range("split outcome out of range");

    Scenario lifted = old;
    if (party == Party::Alice) {
        (setting == 1 ? lifted.l1 : lifted.l2) += 1;
    } else {
        (setting == 1 ? lifted.r1 : lifted.r2) += 1;
    }
    const int fresh = count;  // the new outcome takes the last index

    std::vector<BellTerm> terms;
    for (const BellTerm& t : expr.terms()) {
        terms.push_back(t);
        const bool hits = (party == Party::Alice) ? (t.a == setting && t.i == outcome)
                                                  : (t.b == setting && t.j == outcome);
        if (hits) {
            BellTerm dup = t;
            (party == Party::Alice ? dup.i : dup.j) = fresh;
            terms.push_back(dup);
        }
    }
    return BellExpression(lifted, std::move(terms), expr.name());
}

double lambda_sum(const BellExpression& expr) {
    double sum = 0.0;
    for (const BellTerm& t : expr.terms()) sum += t.coefficient;
    return sum;
}

}  // namespace belleq
