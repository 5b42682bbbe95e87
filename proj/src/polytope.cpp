#include "belleq/polytope.hpp"

#include <stdexcept>

#include <Eigen/Dense>

namespace belleq {

namespace {

constexpr double kRankCutoff = 1e-9;  // relative to the largest singular value
constexpr std::size_t kMaxStrategies = 10'000;

int numeric_rank(const Eigen::MatrixXd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > kRankCutoff * sv(0)) ++rank;
    return rank;
}

}  // namespace

int independent_count_formula(const Scenario& s) {
    return (s.l1 + s.l2) * (s.r1 + s.r2) - (s.l1 + s.l2 + s.r1 + s.r2 - 1);
}

int independent_count_parameterization(const Scenario& s) {
    const int la = (s.l1 - 1) + (s.l2 - 1);
    const int rb = (s.r1 - 1) + (s.r2 - 1);
    return la * rb + la + rb;
}

int affine_dimension(const Scenario& scn) {
    const auto strategies = enumerate_strategies(scn);
    if (strategies.size() > kMaxStrategies)
        throw std::runtime_error("scenario too large for strategy enumeration");
    const int dim = scn.p_dimension();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(strategies.size()) - 1, dim);
    const PVector base = strategy_to_p(strategies[0], scn);
    for (std::size_t r = 1; r < strategies.size(); ++r) {
        const PVector p = strategy_to_p(strategies[r], scn);
        for (int c = 0; c < dim; ++c)
            m(static_cast<Eigen::Index>(r - 1), c) = p.values[c] - base.values[c];
    }
    return numeric_rank(m);
}

int constraint_rank(const Scenario& scn) {
    const int dim = scn.p_dimension();
    const int rows = 4 + (scn.l1 + scn.l2) + (scn.r1 + scn.r2);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, dim);
    int row = 0;
    // normalization: each setting-pair block sums to 1
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            for (int i = 0; i < scn.alice_outcomes(a); ++i)
                for (int j = 0; j < scn.bob_outcomes(b); ++j)
                    m(row, static_cast<Eigen::Index>(scn.p_index(a, b, i, j))) = 1.0;
            ++row;
        }
    // no-signaling: Alice's marginal for (a, i) independent of Bob's setting
    for (int a = 1; a <= 2; ++a)
        for (int i = 0; i < scn.alice_outcomes(a); ++i) {
            for (int j = 0; j < scn.bob_outcomes(1); ++j)
                m(row, static_cast<Eigen::Index>(scn.p_index(a, 1, i, j))) += 1.0;
            for (int j = 0; j < scn.bob_outcomes(2); ++j)
                m(row, static_cast<Eigen::Index>(scn.p_index(a, 2, i, j))) -= 1.0;
            ++row;
        }
    // and Bob's for (b, j) independent of Alice's setting
    for (int b = 1; b <= 2; ++b)
        for (int j = 0; j < scn.bob_outcomes(b); ++j) {
            for (int i = 0; i < scn.alice_outcomes(1); ++i)
                m(row, static_cast<Eigen::Index>(scn.p_index(1, b, i, j))) += 1.0;
            for (int i = 0; i < scn.alice_outcomes(2); ++i)
                m(row, static_cast<Eigen::Index>(scn.p_index(2, b, i, j))) -= 1.0;
            ++row;
        }
    return numeric_rank(m);
}

DimensionReport dimension_report(const Scenario& scn) {
    DimensionReport r;
    r.scenario = scn;
    r.count_formula = independent_count_formula(scn);
    r.count_parameterization = independent_count_parameterization(scn);
    r.affine_dimension = affine_dimension(scn);
    r.constraint_rank = constraint_rank(scn);
    r.p_dimension = scn.p_dimension();
    return r;
}

}  // namespace belleq
