#include "belleq/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>

#include "belleq/analysis.hpp"

namespace belleq {

namespace {

constexpr double kBad = -1e100;  // rejected candidate (degenerate state block)

struct ParamLayout {
    int dimension = 0;
    bool free_state = false;
    bool free_alpha = false;
    bool free_beta = false;

    int size() const {
        return (free_state ? 2 * dimension * dimension : 0) + (free_alpha ? 2 : 0) +
               (free_beta ? 2 : 0);
    }
};

double wrap_phase(double x, int D) {
    const double d = static_cast<double>(D);
    double w = std::fmod(x, d);
    if (w < 0.0) w += d;
    return w;
}

// Free blocks come from x; pinned blocks from base. The state block is
// projected onto the normalization sphere; returns false if it collapsed.
bool unpack(const ParamLayout& lay, const std::vector<double>& x,
            const QuantumSettings& base, QuantumSettings& out) {
    out = base;
    int ofs = 0;
    if (lay.free_state) {
        const int n = lay.dimension * lay.dimension;
        double norm2 = 0.0;
        for (int k = 0; k < n; ++k) {
            const double re = x[ofs + 2 * k];
            const double im = x[ofs + 2 * k + 1];
            norm2 += re * re + im * im;
        }
        if (norm2 < 1e-18) return false;
        const double inv = 1.0 / std::sqrt(norm2);
        for (int k = 0; k < n; ++k)
            out.coefficients[k] = {x[ofs + 2 * k] * inv, x[ofs + 2 * k + 1] * inv};
        ofs += 2 * n;
    }
    if (lay.free_alpha) {
        out.alpha = {wrap_phase(x[ofs], lay.dimension),
                     wrap_phase(x[ofs + 1], lay.dimension)};
        ofs += 2;
    }
    if (lay.free_beta) {
        out.beta = {wrap_phase(x[ofs], lay.dimension),
                    wrap_phase(x[ofs + 1], lay.dimension)};
    }
    return true;
}

std::vector<double> pack(const ParamLayout& lay, const QuantumSettings& s) {
    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(lay.size()));
    if (lay.free_state) {
        for (const auto& c : s.coefficients) {
            x.push_back(c.real());
            x.push_back(c.imag());
        }
    }
    if (lay.free_alpha) {
        x.push_back(s.alpha[0]);
        x.push_back(s.alpha[1]);
    }
    if (lay.free_beta) {
        x.push_back(s.beta[0]);
        x.push_back(s.beta[1]);
    }
    return x;
}

// Signed search objective: positive where the reported metric is live,
// negative but informative where it is not, so the simplex can climb out
// of the non-violating region.
double surrogate(const BellExpression& expr, const BellExpression* complement,
                 Objective objective, const LocalBounds& bounds, double white,
                 const QuantumSettings& s) {
    switch (objective) {
        case Objective::QuantumValue:
            return quantum_value(expr, s);
        case Objective::Violation: {
            const double v = quantum_value(expr, s);
            return std::max(v - bounds.upper, bounds.lower - v);
        }
        case Objective::TolerancePinned: {
            if (complement != nullptr) {
                const double vc = quantum_value(*complement, s);
                if (vc >= 0.0) return -vc;
                const double v = 1.0 - vc;  // complement identity
                const double benchmark = 1.0 + vc;
                const double denom = v - white;
                if (denom <= 1e-12) return 1.0;
                return std::min((v - benchmark) / denom, 1.0);
            }
            const double v = quantum_value(expr, s);
            const double gap = std::max(v - bounds.upper, bounds.lower - v);
            if (gap <= 0.0) return gap;  // climb toward a violation first
            const double bound = (v > bounds.upper) ? bounds.upper : bounds.lower;
            if (std::abs(v - white) < 1e-12) return 0.0;
            const double p = (v - bound) / (v - white);
            return (p < 0.0 || p > 1.0) ? 1.0 : p;
        }
    }
    return kBad;
}

struct SimplexOutcome {
    std::vector<double> x;
    double f = kBad;
    long iterations = 0;
};

// Standard reflection/expansion/contraction/shrink simplex, maximizing f.
SimplexOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                           std::vector<double> x0, double step, long max_iter,
                           double ftol) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> xs(n + 1, x0);
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i < n; ++i) xs[i + 1][i] += step;
    for (std::size_t i = 0; i <= n; ++i) fs[i] = f(xs[i]);

    const auto order = [&] {
        // best first
        std::vector<std::size_t> idx(n + 1);
        for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return fs[a] > fs[b]; });
        std::vector<std::vector<double>> xs2(n + 1);
        std::vector<double> fs2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            xs2[i] = std::move(xs[idx[i]]);
            fs2[i] = fs[idx[i]];
        }
        xs = std::move(xs2);
        fs = std::move(fs2);
    };

    SimplexOutcome out;
    long it = 0;
    for (; it < max_iter; ++it) {
        order();
        if (fs[0] - fs[n] <= ftol && std::isfinite(fs[n])) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t d = 0; d < n; ++d) centroid[d] += xs[i][d] / n;

        const auto blend = [&](double t) {
            std::vector<double> y(n);
            for (std::size_t d = 0; d < n; ++d)
                y[d] = centroid[d] + t * (xs[n][d] - centroid[d]);
            return y;
        };

        std::vector<double> xr = blend(-1.0);  // reflection
        const double fr = f(xr);
        if (fr > fs[0]) {
            std::vector<double> xe = blend(-2.0);  // expansion
            const double fe = f(xe);
            if (fe > fr) {
                xs[n] = std::move(xe);
                fs[n] = fe;
            } else {
                xs[n] = std::move(xr);
                fs[n] = fr;
            }
        } else if (fr > fs[n - 1]) {
            xs[n] = std::move(xr);
            fs[n] = fr;
        } else {
            const double t = (fr > fs[n]) ? -0.5 : 0.5;  // contraction
            std::vector<double> xc = blend(t);
            const double fc = f(xc);
            if (fc > std::max(fr, fs[n])) {
                xs[n] = std::move(xc);
                fs[n] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {  // shrink toward best
                    for (std::size_t d = 0; d < n; ++d)
                        xs[i][d] = xs[0][d] + 0.5 * (xs[i][d] - xs[0][d]);
                    fs[i] = f(xs[i]);
                }
            }
        }
    }
    order();
    out.x = xs[0];
    out.f = fs[0];
    out.iterations = it;
    return out;
}

struct RestartOutcome {
    double f = kBad;
    QuantumSettings settings;
    long iterations = 0;
    std::vector<std::pair<long, double>> trace;
};

// One seeded descent: simplex runs restarted from their own endpoint until
// the improvement stalls or the iteration budget runs out.
RestartOutcome run_descent(const BellExpression& expr, const BellExpression* complement,
                           const OptimizationConfig& config, const ParamLayout& lay,
                           const QuantumSettings& base, std::vector<double> x0) {
    const LocalBounds bounds = local_bounds(expr);
    const double D2 = static_cast<double>(lay.dimension) * lay.dimension;
    const double white = lambda_sum(expr) / D2;

    RestartOutcome out;
    QuantumSettings candidate = base;
    const auto eval = [&](const std::vector<double>& x) {
        if (!unpack(lay, x, base, candidate)) return kBad;
        return surrogate(expr, complement, config.objective, bounds, white, candidate);
    };

    double best = eval(x0);
    std::vector<double> best_x = x0;
    long used = 0;
    if (config.record_trace) out.trace.emplace_back(0, best);

    double step = 0.5;
    while (used < config.max_iterations) {
        SimplexOutcome nm =
            nelder_mead(eval, best_x, step, config.max_iterations - used,
                        config.tolerance);
        used += std::max(nm.iterations, 1L);
        const double gain = nm.f - best;
        if (nm.f > best) {
            best = nm.f;
            best_x = std::move(nm.x);
            if (config.record_trace) out.trace.emplace_back(used, best);
        }
        step *= 0.25;  // polish from the endpoint with a tighter simplex
        if (gain <= std::max(config.tolerance, 1e-13)) break;
    }

    out.f = best;
    out.iterations = used;
    unpack(lay, best_x, base, out.settings);
    return out;
}

void validate_config(const OptimizationConfig& config) {
    if (!config.free_state && !config.free_alpha && !config.free_beta)
        throw std::invalid_argument("at least one parameter group must be free");
    if (config.restarts < 1) throw std::invalid_argument("restarts must be positive");
    if (config.max_iterations < 0)
        throw std::invalid_argument("max_iterations must be nonnegative");
}

int uniform_dimension(const Scenario& scn) {
    if (scn.l1 != scn.l2 || scn.l1 != scn.r1 || scn.l1 != scn.r2)
        throw std::domain_error("optimization requires uniform outcome counts");
    return scn.l1;
}

}  // namespace

double objective_value(const BellExpression& expr, const BellExpression* complement,
                       Objective objective, const QuantumSettings& s) {
    switch (objective) {
        case Objective::QuantumValue:
            return quantum_value(expr, s);
        case Objective::Violation:
            return violation_amount(expr, s);
        case Objective::TolerancePinned:
            try {
                return complement != nullptr
                           ? equality_tolerance_pinned(expr, *complement, s)
                           : inequality_tolerance(expr, s);
            } catch (const std::domain_error&) {
                return 0.0;  // metric unavailable at this point
            }
    }
    throw std::invalid_argument("unknown objective");
}

OptimizationResult maximize(const BellExpression& expr,
                            const BellExpression* complement,
                            const OptimizationConfig& config) {
    validate_config(config);
    const int D = uniform_dimension(expr.scenario());
    const QuantumSettings base =
        config.base ? *config.base : QuantumSettings::maximally_entangled(D);
    if (base.dimension != D) throw std::domain_error("base settings dimension mismatch");
    if (!validate_settings(base)) throw std::domain_error("base settings not normalized");

    ParamLayout lay{D, config.free_state, config.free_alpha, config.free_beta};

    const auto run_one = [&](int k) {
        std::mt19937_64 rng(config.seed ^ static_cast<std::uint64_t>(k));
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> phase(0.0, static_cast<double>(D));
        std::vector<double> x0;
        x0.reserve(static_cast<std::size_t>(lay.size()));
        if (lay.free_state)
            for (int i = 0; i < 2 * D * D; ++i) x0.push_back(gauss(rng));
        if (lay.free_alpha) {
            x0.push_back(phase(rng));
            x0.push_back(phase(rng));
        }
        if (lay.free_beta) {
            x0.push_back(phase(rng));
            x0.push_back(phase(rng));
        }
        return run_descent(expr, complement, config, lay, base, std::move(x0));
    };

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
    if (config.parallel) {
        std::vector<std::future<RestartOutcome>> futures;
        futures.reserve(outcomes.size());
        for (int k = 0; k < config.restarts; ++k)
            futures.push_back(std::async(std::launch::async, run_one, k));
        for (int k = 0; k < config.restarts; ++k) outcomes[k] = futures[k].get();
    } else {
        for (int k = 0; k < config.restarts; ++k) outcomes[k] = run_one(k);
    }

    int best_k = 0;
    for (int k = 1; k < config.restarts; ++k)
        if (outcomes[k].f > outcomes[best_k].f) best_k = k;  // ties keep lowest index

    const RestartOutcome& win = outcomes[static_cast<std::size_t>(best_k)];
    OptimizationResult result;
    result.best_settings = win.settings;
    result.restart_index = best_k;
    result.iterations_used = win.iterations;
    result.trace = win.trace;
    result.best_objective =
        objective_value(expr, complement, config.objective, win.settings);
    result.violation_found =
        config.objective == Objective::QuantumValue || result.best_objective > 0.0;
    return result;
}

OptimizationResult refine(const BellExpression& expr, const BellExpression* complement,
                          const QuantumSettings& start,
                          const OptimizationConfig& config) {
    validate_config(config);
    const int D = uniform_dimension(expr.scenario());
    if (start.dimension != D)
        throw std::domain_error("start settings dimension mismatch");
    if (!validate_settings(start)) throw std::domain_error("start settings not normalized");

    OptimizationResult result;
    const double start_objective =
        objective_value(expr, complement, config.objective, start);
    if (config.max_iterations == 0) {
        result.best_settings = start;
        result.best_objective = start_objective;
        result.violation_found =
            config.objective == Objective::QuantumValue || start_objective > 0.0;
        return result;
    }

    ParamLayout lay{D, config.free_state, config.free_alpha, config.free_beta};
    RestartOutcome out =
        run_descent(expr, complement, config, lay, start, pack(lay, start));
    result.best_settings = out.settings;
    result.iterations_used = out.iterations;
    result.trace = out.trace;
    result.best_objective =
        objective_value(expr, complement, config.objective, out.settings);
    if (result.best_objective < start_objective) {
        result.best_settings = start;  // a descent never loses the start point
        result.best_objective = start_objective;
    }
    result.violation_found =
        config.objective == Objective::QuantumValue || result.best_objective > 0.0;
    return result;
}

}  // namespace belleq
