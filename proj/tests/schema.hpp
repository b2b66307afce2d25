#pragma once
// Structural validators for the documented JSON wire formats. Used by both
// the unit tests and the acceptance suite; the golden files under
// tests/golden pin concrete instances.

#include <json.hpp>

#include <string>

namespace schema {

using Json = nlohmann::ordered_json;

inline bool is_decimal_string(const Json& j) {
    if (!j.is_string()) return false;
    const std::string s = j.get<std::string>();
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline bool validate_qpoly(const Json& j, std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!j.is_object()) return fail("qpoly: not an object");
    if (!j.contains("min_deg") || !j["min_deg"].is_number_integer())
        return fail("qpoly: min_deg missing or not an integer");
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        return fail("qpoly: coeffs missing or not an array");
    for (const auto& c : j["coeffs"])
        if (!is_decimal_string(c)) return fail("qpoly: coefficient not a decimal string");
    if (!j["coeffs"].empty()) {
        if (j["coeffs"].front() == "0" || j["coeffs"].back() == "0")
            return fail("qpoly: not in canonical form");
    }
    return true;
}

inline bool validate_report(const Json& j, std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!j.is_object()) return fail("report: not an object");
    if (!j.contains("identity") || !j["identity"].is_string())
        return fail("report: identity missing");
    if (!j.contains("params") || !j["params"].is_object()) return fail("report: params missing");
    for (const auto& [k, v] : j["params"].items()) {
        (void)k;
        if (!v.is_number_integer() && !v.is_string())
            return fail("report: param neither integer nor string");
    }
    if (!j.contains("status") || !j["status"].is_string()) return fail("report: status missing");
    const std::string st = j["status"].get<std::string>();
    if (st != "pass" && st != "fail" && st != "reported")
        return fail("report: bad status value");
    if (!j.contains("witness")) return fail("report: witness missing");
    if (st == "pass") {
        if (!j["witness"].is_null()) return fail("report: pass row carries a witness");
    } else {
        if (!j["witness"].is_object()) return fail("report: non-pass row lacks a witness");
    }
    if (j["witness"].is_object()) {
        const auto& w = j["witness"];
        if (!w.contains("lhs") || !w.contains("rhs") || !w.contains("note"))
            return fail("report: witness lacks lhs/rhs/note");
        if (!w["lhs"].is_null() && !validate_qpoly(w["lhs"], why))
            return fail("report: witness lhs is not a qpoly");
        if (!w["rhs"].is_null() && !validate_qpoly(w["rhs"], why))
            return fail("report: witness rhs is not a qpoly");
        if (!w["note"].is_string()) return fail("report: witness note not a string");
    }
    if (!j.contains("elapsed_ms") || !j["elapsed_ms"].is_number())
        return fail("report: elapsed_ms missing");
    return true;
}

inline bool validate_report_array(const Json& j, std::string* why = nullptr) {
    if (!j.is_array()) {
        if (why) *why = "reports: not an array";
        return false;
    }
    for (const auto& r : j)
        if (!validate_report(r, why)) return false;
    return true;
}

inline bool validate_trace(const Json& j, std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!j.is_object()) return fail("trace: not an object");
    for (const char* key : {"name", "input", "output"})
        if (!j.contains(key) || !j[key].is_string()) return fail("trace: missing string field");
    if (!j.contains("case") ||
        !(j["case"].is_null() || j["case"] == "case1" || j["case"] == "case2"))
        return fail("trace: bad case");
    if (!j.contains("landmarks") || !j["landmarks"].is_object())
        return fail("trace: landmarks missing");
    for (const auto& [k, v] : j["landmarks"].items()) {
        (void)k;
        bool point = v.is_number_integer();
        bool range = v.is_array() && v.size() == 2 && v[0].is_number_integer() &&
                     v[1].is_number_integer();
        if (!point && !range) return fail("trace: landmark neither point nor range");
    }
    if (!j.contains("stat_delta") || !j["stat_delta"].is_object() ||
        !j["stat_delta"].contains("maj") || !j["stat_delta"].contains("des"))
        return fail("trace: stat_delta missing");
    return true;
}

inline bool validate_path_listing(const Json& j, bool with_stats, std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!j.is_array()) return fail("paths: not an array");
    for (const auto& row : j) {
        if (!with_stats) {
            if (!row.is_string()) return fail("paths: entry not a word");
            continue;
        }
        if (!row.is_object() || !row.contains("path") || !row["path"].is_string())
            return fail("paths: entry lacks path");
        for (const char* key : {"maj", "des", "height", "end_level", "min_level"})
            if (!row.contains(key) || !row[key].is_number_integer())
                return fail("paths: entry lacks an integer stat");
        for (const char* key : {"h_minus", "h_plus"})
            if (!row.contains(key) || !(row[key].is_null() || row[key].is_number_integer()))
                return fail("paths: bad h split");
    }
    return true;
}

}  // namespace schema
