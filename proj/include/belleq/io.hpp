#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "belleq/analysis.hpp"
#include "belleq/bell.hpp"
#include "belleq/optimize.hpp"
#include "belleq/polytope.hpp"
#include "belleq/quantum.hpp"

namespace belleq::io {

inline constexpr const char* kFormatVersion = "1";

// Settings document: the state plus an optional noise fraction.
struct SettingsFile {
    QuantumSettings settings;
    std::optional<double> noise_p;
    std::string name;
};

// Expressions: {format_version, name?, scenario: {alice: [l1,l2],
// bob: [r1,r2]}, terms: [{a,b,i,j,c}, ...]}. a,b are 1-based, i,j 0-based.
nlohmann::json to_json(const BellExpression& expr);
BellExpression expression_from_json(const nlohmann::json& j);
BellExpression load_expression(const std::filesystem::path& path);
void save_expression(const BellExpression& expr, const std::filesystem::path& path);

// Settings: {format_version, name?, dimension, C: D x D of [re, im],
// alpha: [a1, a2], beta: [b1, b2], noise_p?}.
nlohmann::json to_json(const SettingsFile& sf);
SettingsFile settings_from_json(const nlohmann::json& j);
SettingsFile load_settings(const std::filesystem::path& path);
void save_settings(const SettingsFile& sf, const std::filesystem::path& path);

// Optimizer config: {format_version, objective, free: [...], restarts,
// max_iterations, seed, tolerance?, parallel?}.
nlohmann::json to_json(const OptimizationConfig& config);
OptimizationConfig config_from_json(const nlohmann::json& j);
OptimizationConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const AnalysisReport& report);
AnalysisReport analysis_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DimensionReport& report);

// Canonical serialization used for every emitted document; parsing and
// re-serializing is the identity on this form.
std::string dump(const nlohmann::json& j);

nlohmann::json parse_file(const std::filesystem::path& path);
void write_file(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace belleq::io
