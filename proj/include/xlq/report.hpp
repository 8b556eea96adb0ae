#pragma once

// Machine-readable run reports.  JSON layout:
//   { meta: {version, command, params, seed, timestamp},
//     results: ...,
//     checks: [{name, value, tolerance, pass}] }
// CSV: header row + one data row per entry of results (which must then be an
// array of flat objects); floats carry 17 significant digits.  Output is
// byte-deterministic for a fixed config except for meta.timestamp.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

namespace xlq {

using ordered_json = nlohmann::ordered_json;

inline const char* version_string() { return "1.0.0"; }

struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

inline Check make_check(std::string name, double value, double tolerance) {
    const bool pass = std::abs(value) <= tolerance;
    return {std::move(name), value, tolerance, pass};
}

struct Report {
    std::string command;
    ordered_json params = ordered_json::object();
    long long seed = 42;
    ordered_json results;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    ordered_json to_json(bool with_timestamp = true) const {
        ordered_json j;
        j["meta"] = {{"version", version_string()},
                     {"command", command},
                     {"params", params},
                     {"seed", seed}};
        if (with_timestamp) {
            const auto now = std::chrono::system_clock::now();
            const std::time_t t = std::chrono::system_clock::to_time_t(now);
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
            j["meta"]["timestamp"] = buf;
        }
        j["results"] = results;
        ordered_json cj = ordered_json::array();
        for (const auto& c : checks)
            cj.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance},
                          {"pass", c.pass}});
        j["checks"] = cj;
        return j;
    }

    // results must be an array of flat objects; columns follow the first row
    std::string to_csv() const {
        if (!results.is_array() || results.empty() || !results[0].is_object())
            return "# no tabular results\n";
        std::string out;
        bool first = true;
        for (const auto& [key, _] : results[0].items()) {
            if (!first) out += ',';
            out += key;
            first = false;
        }
        out += '\n';
        char buf[64];
        for (const auto& row : results) {
            first = true;
            for (const auto& [key, val] : row.items()) {
                if (!first) out += ',';
                first = false;
                if (val.is_number_float()) {
                    std::snprintf(buf, sizeof buf, "%.17g", val.get<double>());
                    out += buf;
                } else if (val.is_string()) {
                    out += val.get<std::string>();
                } else {
                    out += val.dump();
                }
            }
            out += '\n';
        }
        return out;
    }
};

}  // namespace xlq
