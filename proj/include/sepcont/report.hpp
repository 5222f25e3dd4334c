#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "sepcont/rational.hpp"

namespace sepcont {

struct Witness {
    std::string label;
    std::string value;
};

// Outcome of one check. A failing report carries the counter-witness.
struct Report {
    std::string name;
    bool passed = true;
    std::vector<std::pair<std::string, std::string>> bounds;
    std::vector<Witness> witnesses;

    Report& bound(std::string key, std::string value) {
        bounds.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    Report& witness(std::string label, std::string value) {
        witnesses.push_back(Witness{std::move(label), std::move(value)});
        return *this;
    }

    Report& fail(std::string label, std::string value) {
        passed = false;
        return witness(std::move(label), std::move(value));
    }
};

// One line: "PASS name key=value ... label=value ...".
inline std::string to_text(const Report& r) {
    std::string out = r.passed ? "PASS " : "FAIL ";
    out += r.name;
    for (const auto& [k, v] : r.bounds)
        out += " " + k + "=" + v;
    for (const auto& w : r.witnesses)
        out += " " + w.label + "=" + w.value;
    return out;
}

inline nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["status"] = r.passed ? "pass" : "fail";
    nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.bounds)
        bounds[k] = v;
    j["bounds"] = std::move(bounds);
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses)
        ws.push_back({{"label", w.label}, {"value", w.value}});
    j["witnesses"] = std::move(ws);
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<Report>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports)
        arr.push_back(to_json(r));
    return arr;
}

} // namespace sepcont
