// Check reports: deterministic text rendering and a stable JSON schema.
//
// JSON form:
//   { "command": "...", "overall": "pass" | "fail",
//     "checks": [ { "name": "...", "status": "pass" | "fail" | "skip",
//                   "detail": "...", "residual": <number, optional> } ] }
#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kzero/checks.hpp"

namespace kzero {

struct ReportEntry {
    std::string name;
    std::string status;  // "pass", "fail", "skip"
    std::string detail;
    std::optional<double> residual;
};

struct Report {
    std::string command;
    std::vector<ReportEntry> entries;

    void add(std::string name, bool pass, std::string detail = "",
             std::optional<double> residual = std::nullopt) {
        entries.push_back({std::move(name), pass ? "pass" : "fail", std::move(detail),
                           residual});
    }
    void skip(std::string name, std::string detail) {
        entries.push_back({std::move(name), "skip", std::move(detail), std::nullopt});
    }
    void add(const Check& c, const std::string& prefix = "") {
        entries.push_back({prefix.empty() ? c.name : prefix + "/" + c.name,
                           c.pass ? "pass" : "fail", c.detail,
                           c.error != 0 ? std::optional<double>(c.error) : std::nullopt});
    }
    void add(const CheckList& list, const std::string& prefix = "") {
        for (const auto& c : list) add(c, prefix);
    }

    bool ok() const {
        for (const auto& e : entries)
            if (e.status == "fail") return false;
        return true;
    }

    nlohmann::ordered_json json() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["overall"] = ok() ? "pass" : "fail";
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
            nlohmann::ordered_json c;
            c["name"] = e.name;
            c["status"] = e.status;
            c["detail"] = e.detail;
            if (e.residual) c["residual"] = *e.residual;
            j["checks"].push_back(std::move(c));
        }
        return j;
    }

    void text(std::ostream& os) const {
        for (const auto& e : entries) {
            std::string tag = e.status == "pass" ? "PASS" : e.status == "fail" ? "FAIL" : "SKIP";
            os << "[" << tag << "] " << e.name;
            if (!e.detail.empty()) os << ": " << e.detail;
            if (e.residual) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3e", *e.residual);
                os << " (residual " << buf << ")";
            }
            os << "\n";
        }
        os << "overall: " << (ok() ? "pass" : "fail") << " (" << entries.size()
           << " checks)\n";
    }
};

}  // namespace kzero
