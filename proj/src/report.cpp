#include "fibwalk/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fibwalk {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Degenerate: return "degenerate";
    }
    return "?";
}

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "degenerate") return CheckStatus::Degenerate;
    throw std::invalid_argument("unknown check status: " + s);
}

std::size_t VerificationReport::count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

bool VerificationReport::all_passed() const { return count(CheckStatus::Fail) == 0; }

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "text") return ReportFormat::Text;
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown report format: " + s);
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"params", c.params},
                          {"status", to_string(c.status)},
                          {"witnesses", c.witnesses},
                          {"elapsed_ms", c.elapsed_ms}});
    }
    return {{"version", report.version},
            {"checks", checks},
            {"summary",
             {{"pass", report.count(CheckStatus::Pass)},
              {"fail", report.count(CheckStatus::Fail)},
              {"degenerate", report.count(CheckStatus::Degenerate)}}}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.version = j.at("version").get<std::string>();
    for (const auto& c : j.at("checks")) {
        CheckResult cr;
        cr.name = c.at("name").get<std::string>();
        cr.params = c.at("params");
        cr.status = status_from_string(c.at("status").get<std::string>());
        cr.witnesses = c.at("witnesses");
        cr.elapsed_ms = c.at("elapsed_ms").get<double>();
        r.checks.push_back(std::move(cr));
    }
    return r;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json:
            return report_to_json(report).dump(2) + "\n";
        case ReportFormat::Csv: {
            std::ostringstream os;
            os << "name,params,status,witnesses,elapsed_ms\n";
            for (const auto& c : report.checks) {
                os << csv_escape(c.name) << "," << csv_escape(c.params.dump()) << ","
                   << to_string(c.status) << "," << csv_escape(c.witnesses.dump()) << ","
                   << c.elapsed_ms << "\n";
            }
            return os.str();
        }
        case ReportFormat::Text: {
            std::ostringstream os;
            os << "verification report (version " << report.version << ")\n";
            for (const auto& c : report.checks) {
                os << "  " << to_string(c.status) << "  " << c.name;
                if (!c.params.empty()) os << "  " << c.params.dump();
                os << "  [" << c.elapsed_ms << " ms]\n";
            }
            os << "summary: " << report.count(CheckStatus::Pass) << " pass, "
               << report.count(CheckStatus::Fail) << " fail, "
               << report.count(CheckStatus::Degenerate) << " degenerate\n";
            return os.str();
        }
    }
    throw std::invalid_argument("unknown report format");
}

}  // namespace fibwalk
