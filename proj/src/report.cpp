#include "diffinv/report.hpp"

#include <json.hpp>

namespace diffinv {

std::string status_name(VerifyStatus s) {
    switch (s) {
    case VerifyStatus::Pass: return "pass";
    case VerifyStatus::Fail: return "fail";
    case VerifyStatus::Degenerate: return "degenerate";
    }
    return "?";
}

std::string mode_name(RunMode m) {
    return m == RunMode::Symbolic ? "symbolic" : "evaluation";
}

std::string report_json(const VerifyReport& report, const std::string& command, unsigned n) {
    nlohmann::json j;
    j["command"] = command;
    j["identity"] = report.identity;
    j["n"] = n;
    j["mode"] = mode_name(report.mode);
    j["trials"] = report.trials_run;
    j["seed"] = report.seed;
    j["status"] = status_name(report.status);
    if (!report.note.empty()) j["note"] = report.note;
    if (report.witness) {
        nlohmann::json w = nlohmann::json::object();
        for (const auto& [v, q] : *report.witness) w[v.display()] = rat_str(q);
        j["witness"] = w;
    }
    return j.dump();
}

} // namespace diffinv
