#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace belleq {

// One reproduced number: the published expected value against the value
// this library computes.
struct VerificationCheck {
    std::string name;
    std::variant<double, long> expected;
    std::variant<double, long> computed;
    double tolerance = 0.0;
    bool pass = false;
    std::string source;  // where the expected value comes from
    bool informational = false;
    std::string note;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool overall_pass = false;  // conjunction over non-informational checks
    std::string artifact_version;
    std::string timestamp;
};

// Run the full reproduction suite against the bundled fixtures.
// Throws std::runtime_error if a fixture file is missing.
VerificationReport run_verification(const std::filesystem::path& data_dir);

namespace io {
nlohmann::json to_json(const VerificationReport& report);
VerificationReport verification_report_from_json(const nlohmann::json& j);
}  // namespace io

}  // namespace belleq
