#include "belleq/io.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace belleq::io {

namespace {

using nlohmann::json;

void require_version(const json& j) {
    if (!j.is_object() || !j.contains("format_version"))
        throw std::invalid_argument("missing format_version");
    if (j.at("format_version").get<std::string>() != kFormatVersion)
        throw std::invalid_argument("unsupported format_version");
}

json scenario_to_json(const Scenario& s) {
    return json{{"alice", {s.l1, s.l2}}, {"bob", {s.r1, s.r2}}};
}

Scenario scenario_from_json(const json& j) {
    const auto alice = j.at("alice");
    const auto bob = j.at("bob");
    if (alice.size() != 2 || bob.size() != 2)
        throw std::invalid_argument("scenario needs two outcome counts per party");
    return Scenario(alice[0].get<int>(), alice[1].get<int>(), bob[0].get<int>(),
                    bob[1].get<int>());
}

json variant_to_json(const std::variant<double, long>& v) {
    if (std::holds_alternative<long>(v)) return std::get<long>(v);
    return std::get<double>(v);
}

std::variant<double, long> variant_from_json(const json& j) {
    if (j.is_number_integer()) return j.get<long>();
    return j.get<double>();
}

}  // namespace

json to_json(const BellExpression& expr) {
    json terms = json::array();
    for (const BellTerm& t : expr.terms())
        terms.push_back(
            json{{"a", t.a}, {"b", t.b}, {"i", t.i}, {"j", t.j}, {"c", t.coefficient}});
    json j{{"format_version", kFormatVersion},
           {"scenario", scenario_to_json(expr.scenario())},
           {"terms", std::move(terms)}};
    if (!expr.name().empty()) j["name"] = expr.name();
    return j;
}

BellExpression expression_from_json(const json& j) {
    require_version(j);
    const Scenario scn = scenario_from_json(j.at("scenario"));
    std::vector<BellTerm> terms;
    for (const auto& t : j.at("terms"))
        terms.push_back(BellTerm{t.at("a").get<int>(), t.at("b").get<int>(),
                                 t.at("i").get<int>(), t.at("j").get<int>(),
                                 t.at("c").get<double>()});
    return BellExpression(scn, std::move(terms), j.value("name", ""));
}

BellExpression load_expression(const std::filesystem::path& path) {
    return expression_from_json(parse_file(path));
}

void save_expression(const BellExpression& expr, const std::filesystem::path& path) {
    write_file(to_json(expr), path);
}

json to_json(const SettingsFile& sf) {
    const QuantumSettings& s = sf.settings;
    json C = json::array();
    for (int j = 0; j < s.dimension; ++j) {
        json row = json::array();
        for (int k = 0; k < s.dimension; ++k)
            row.push_back({s.C(j, k).real(), s.C(j, k).imag()});
        C.push_back(std::move(row));
    }
    json out{{"format_version", kFormatVersion},
             {"dimension", s.dimension},
             {"C", std::move(C)},
             {"alpha", {s.alpha[0], s.alpha[1]}},
             {"beta", {s.beta[0], s.beta[1]}}};
    if (!sf.name.empty()) out["name"] = sf.name;
    if (sf.noise_p) out["noise_p"] = *sf.noise_p;
    return out;
}

SettingsFile settings_from_json(const json& j) {
    require_version(j);
    const int D = j.at("dimension").get<int>();
    if (D < 2) throw std::invalid_argument("dimension must be >= 2");
    const auto& C = j.at("C");
    if (C.size() != static_cast<std::size_t>(D))
        throw std::invalid_argument("C must have D rows");
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(static_cast<std::size_t>(D) * D);
    for (const auto& row : C) {
        if (row.size() != static_cast<std::size_t>(D))
            throw std::invalid_argument("C must have D columns");
        for (const auto& entry : row) {
            if (entry.size() != 2)
                throw std::invalid_argument("C entries must be [re, im] pairs");
            coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    const auto& alpha = j.at("alpha");
    const auto& beta = j.at("beta");
    if (alpha.size() != 2 || beta.size() != 2)
        throw std::invalid_argument("alpha and beta need one value per setting");

    SettingsFile sf;
    sf.settings = QuantumSettings(D, std::move(coeffs),
                                  {alpha[0].get<double>(), alpha[1].get<double>()},
                                  {beta[0].get<double>(), beta[1].get<double>()});
    if (j.contains("noise_p")) sf.noise_p = j.at("noise_p").get<double>();
    sf.name = j.value("name", "");
    return sf;
}

SettingsFile load_settings(const std::filesystem::path& path) {
    return settings_from_json(parse_file(path));
}

void save_settings(const SettingsFile& sf, const std::filesystem::path& path) {
    write_file(to_json(sf), path);
}

json to_json(const OptimizationConfig& config) {
    const char* objective = nullptr;
    switch (config.objective) {
        case Objective::QuantumValue: objective = "quantum_value"; break;
        case Objective::Violation: objective = "violation"; break;
        case Objective::TolerancePinned: objective = "tolerance_pinned"; break;
    }
    json free = json::array();
    if (config.free_state) free.push_back("state");
    if (config.free_alpha) free.push_back("alpha");
    if (config.free_beta) free.push_back("beta");
    return json{{"format_version", kFormatVersion},
                {"objective", objective},
                {"free", std::move(free)},
                {"restarts", config.restarts},
                {"max_iterations", config.max_iterations},
                {"seed", config.seed},
                {"tolerance", config.tolerance},
                {"parallel", config.parallel}};
}

OptimizationConfig config_from_json(const json& j) {
    require_version(j);
    OptimizationConfig config;
    const std::string objective = j.at("objective").get<std::string>();
    if (objective == "quantum_value") {
        config.objective = Objective::QuantumValue;
    } else if (objective == "violation") {
        config.objective = Objective::Violation;
    } else if (objective == "tolerance_pinned" || objective == "tolerance") {
        config.objective = Objective::TolerancePinned;
    } else {
        throw std::invalid_argument("unknown objective: " + objective);
    }
    config.free_state = config.free_alpha = config.free_beta = false;
    for (const auto& f : j.at("free")) {
        const std::string name = f.get<std::string>();
        if (name == "state") config.free_state = true;
        else if (name == "alpha") config.free_alpha = true;
        else if (name == "beta") config.free_beta = true;
        else throw std::invalid_argument("unknown free parameter group: " + name);
    }
    if (!config.free_state && !config.free_alpha && !config.free_beta)
        throw std::invalid_argument("at least one parameter group must be free");
    config.restarts = j.value("restarts", config.restarts);
    config.max_iterations = j.value("max_iterations", config.max_iterations);
    config.seed = j.value("seed", config.seed);
    config.tolerance = j.value("tolerance", config.tolerance);
    config.parallel = j.value("parallel", config.parallel);
    return config;
}

OptimizationConfig load_config(const std::filesystem::path& path) {
    return config_from_json(parse_file(path));
}

json to_json(const AnalysisReport& r) {
    json tolerances = json::object();
    if (r.tolerance_inequality) tolerances["inequality"] = *r.tolerance_inequality;
    if (r.tolerance_equality_pinned)
        tolerances["equality_pinned"] = *r.tolerance_equality_pinned;
    if (r.tolerance_equality_strict)
        tolerances["equality_strict"] = *r.tolerance_equality_strict;
    json j{{"format_version", kFormatVersion},
           {"expression", r.expression_name},
           {"quantum_value", r.quantum_value},
           {"bounds", {{"lower", r.bounds.lower}, {"upper", r.bounds.upper}}},
           {"violation_amount", r.violation_amount},
           {"violation_range", r.violation_range},
           {"tolerances", std::move(tolerances)}};
    if (r.violated_bound) j["violated_bound"] = *r.violated_bound;
    if (r.violation_factor) j["violation_factor"] = *r.violation_factor;
    return j;
}

AnalysisReport analysis_report_from_json(const json& j) {
    require_version(j);
    AnalysisReport r;
    r.expression_name = j.value("expression", "");
    r.quantum_value = j.at("quantum_value").get<double>();
    r.bounds = {j.at("bounds").at("lower").get<double>(),
                j.at("bounds").at("upper").get<double>()};
    r.violation_amount = j.at("violation_amount").get<double>();
    r.violation_range = j.at("violation_range").get<double>();
    if (j.contains("violated_bound")) r.violated_bound = j.at("violated_bound").get<double>();
    if (j.contains("violation_factor"))
        r.violation_factor = j.at("violation_factor").get<double>();
    const auto& tol = j.at("tolerances");
    if (tol.contains("inequality"))
        r.tolerance_inequality = tol.at("inequality").get<double>();
    if (tol.contains("equality_pinned"))
        r.tolerance_equality_pinned = tol.at("equality_pinned").get<double>();
    if (tol.contains("equality_strict"))
        r.tolerance_equality_strict = tol.at("equality_strict").get<double>();
    return r;
}

json to_json(const DimensionReport& r) {
    return json{{"format_version", kFormatVersion},
                {"scenario", scenario_to_json(r.scenario)},
                {"independent_count_formula", r.count_formula},
                {"independent_count_parameterization", r.count_parameterization},
                {"affine_dimension", r.affine_dimension},
                {"constraint_rank", r.constraint_rank},
                {"p_dimension", r.p_dimension}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return json::parse(in);
}

void write_file(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << dump(j);
}

}  // namespace belleq::io
