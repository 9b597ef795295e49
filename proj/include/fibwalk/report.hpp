#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace fibwalk {

inline constexpr const char* kVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Degenerate };

const char* to_string(CheckStatus s);
CheckStatus status_from_string(const std::string& s);

struct CheckResult {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    CheckStatus status = CheckStatus::Pass;
    nlohmann::json witnesses = nlohmann::json::array();
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::string version = kVersion;

    std::size_t count(CheckStatus s) const;
    bool all_passed() const;
};

enum class ReportFormat { Text, Json, Csv };

// Throws std::invalid_argument for unknown format names.
ReportFormat report_format_from_string(const std::string& s);

// Deterministic serialization: same report, byte-identical output.
std::string emit_report(const VerificationReport& report, ReportFormat format);

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace fibwalk
