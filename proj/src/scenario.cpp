#include "belleq/scenario.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace belleq {

namespace {

void check_setting(int s) {
    if (s != 1 && s != 2) throw std::out_of_range("setting must be 1 or 2");
}

void check_outcome(int value, int count, const char* what) {
    if (value < 0 || value >= count) throw std::out_of_range(what);
}

}  // namespace

Scenario::Scenario(int l1_, int l2_, int r1_, int r2_)
    : l1(l1_), l2(l2_), r1(r1_), r2(r2_) {
    if (l1 < 2 || l2 < 2 || r1 < 2 || r2 < 2)
        throw std::invalid_argument("all outcome counts must be >= 2");
}

int Scenario::alice_outcomes(int a) const {
    check_setting(a);
    return a == 1 ? l1 : l2;
}

int Scenario::bob_outcomes(int b) const {
    check_setting(b);
    return b == 1 ? r1 : r2;
}

std::size_t Scenario::p_index(int a, int b, int i, int j) const {
    check_setting(a);
    check_setting(b);
    const int la = alice_outcomes(a);
    const int rb = bob_outcomes(b);
    check_outcome(i, la, "alice outcome out of range");
    check_outcome(j, rb, "bob outcome out of range");
    std::size_t offset = 0;
    if (a == 2) offset += static_cast<std::size_t>(l1) * (r1 + r2);
    if (b == 2) offset += static_cast<std::size_t>(la) * r1;
    return offset + static_cast<std::size_t>(i) * rb + j;
}

std::size_t Scenario::gamma_index(int i1, int i2, int j1, int j2) const {
    check_outcome(i1, l1, "i1 out of range");
    check_outcome(i2, l2, "i2 out of range");
    check_outcome(j1, r1, "j1 out of range");
    check_outcome(j2, r2, "j2 out of range");
    return ((static_cast<std::size_t>(i1) * l2 + i2) * r1 + j1) * r2 + j2;
}

std::array<int, 4> Scenario::gamma_unindex(std::size_t flat) const {
    if (flat >= gamma_dimension()) throw std::out_of_range("gamma index out of range");
    const int j2 = static_cast<int>(flat % r2);
    flat /= r2;
    const int j1 = static_cast<int>(flat % r1);
    flat /= r1;
    const int i2 = static_cast<int>(flat % l2);
    const int i1 = static_cast<int>(flat / l2);
    return {i1, i2, j1, j2};
}

std::string Scenario::label() const {
    return "<" + std::to_string(l1) + std::to_string(l2) + "|" + std::to_string(r1) +
           std::to_string(r2) + ">";
}

GammaTensor::GammaTensor(const Scenario& scn, std::vector<double> vals)
    : scenario(scn), values(std::move(vals)) {
    if (values.size() != scenario.gamma_dimension())
        throw std::invalid_argument("gamma tensor size mismatch");
}

bool GammaTensor::is_distribution(double tol) const {
    double sum = 0.0;
    for (double v : values) {
        if (v < -tol) return false;
        sum += v;
    }
    return std::abs(sum - 1.0) <= tol;
}

PVector::PVector(const Scenario& scn, std::vector<double> vals)
    : scenario(scn), values(std::move(vals)) {
    if (values.size() != static_cast<std::size_t>(scenario.p_dimension()))
        throw std::invalid_argument("p-vector size mismatch");
}

std::vector<DeterministicStrategy> enumerate_strategies(const Scenario& scn) {
    std::vector<DeterministicStrategy> out;
    out.reserve(scn.gamma_dimension());
    for (int i1 = 0; i1 < scn.l1; ++i1)
        for (int i2 = 0; i2 < scn.l2; ++i2)
            for (int j1 = 0; j1 < scn.r1; ++j1)
                for (int j2 = 0; j2 < scn.r2; ++j2) out.push_back({i1, i2, j1, j2});
    return out;
}

GammaTensor strategy_to_gamma(const DeterministicStrategy& s, const Scenario& scn) {
    GammaTensor g(scn);
    g.at(s.i1, s.i2, s.j1, s.j2) = 1.0;
    return g;
}

PVector gamma_to_p(const GammaTensor& gamma) {
    const Scenario& scn = gamma.scenario;
    PVector p(scn);
    for (int i1 = 0; i1 < scn.l1; ++i1)
        for (int i2 = 0; i2 < scn.l2; ++i2)
            for (int j1 = 0; j1 < scn.r1; ++j1)
                for (int j2 = 0; j2 < scn.r2; ++j2) {
                    const double v = gamma.at(i1, i2, j1, j2);
                    if (v == 0.0) continue;
                    p.at(1, 1, i1, j1) += v;
                    p.at(1, 2, i1, j2) += v;
                    p.at(2, 1, i2, j1) += v;
                    p.at(2, 2, i2, j2) += v;
                }
    return p;
}

PVector strategy_to_p(const DeterministicStrategy& s, const Scenario& scn) {
    scn.gamma_index(s.i1, s.i2, s.j1, s.j2);  // range check
    PVector p(scn);
    p.at(1, 1, s.i1, s.j1) = 1.0;
    p.at(1, 2, s.i1, s.j2) = 1.0;
    p.at(2, 1, s.i2, s.j1) = 1.0;
    p.at(2, 2, s.i2, s.j2) = 1.0;
    return p;
}

std::vector<std::array<int, 4>> gamma_support(const Scenario& scn, int a, int b, int i,
                                              int j) {
    check_outcome(i, scn.alice_outcomes(a), "alice outcome out of range");
    check_outcome(j, scn.bob_outcomes(b), "bob outcome out of range");
    std::vector<std::array<int, 4>> out;
    for (int i1 = 0; i1 < scn.l1; ++i1)
        for (int i2 = 0; i2 < scn.l2; ++i2)
            for (int j1 = 0; j1 < scn.r1; ++j1)
                for (int j2 = 0; j2 < scn.r2; ++j2) {
                    const int ia = (a == 1) ? i1 : i2;
                    const int jb = (b == 1) ? j1 : j2;
                    if (ia == i && jb == j) out.push_back({i1, i2, j1, j2});
                }
    return out;
}

}  // namespace belleq
