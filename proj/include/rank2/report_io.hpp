#pragma once

#include <json.hpp>

#include "rank2/report.hpp"

namespace rank2 {

inline nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    j["range"] = {report.lo, report.hi};
    j["passed"] = report.passed;
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) {
        nlohmann::ordered_json entry;
        entry["n"] = f.n;
        entry["left"] = f.left;
        entry["right"] = f.right;
        fails.push_back(std::move(entry));
    }
    j["failures"] = std::move(fails);
    return j;
}

inline nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>& reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr;
}

}  // namespace rank2
