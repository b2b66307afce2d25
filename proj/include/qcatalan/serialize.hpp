#pragma once
// serialize.hpp - JSON and CSV encodings of the library's value types.
// Kept separate so the core headers stay free of the JSON dependency.
//
// Wire formats:
//   QPoly    {"min_deg": int, "coeffs": [decimal strings]}
//            coefficients travel as strings because they outgrow 64 bits
//   report   {"identity", "params", "status", "witness"|null, "elapsed_ms"}
//   trace    {"name", "input", "output", "case", "landmarks", "stat_delta"}
//   paths    [{"path", "maj", "des", "height", "end_level", "min_level",
//             "h_minus"|null, "h_plus"|null}]
//   CSV      identity,params,status,note,lhs,rhs,elapsed_ms

#include "qcatalan/bijections.hpp"
#include "qcatalan/identities.hpp"
#include "qcatalan/paths.hpp"
#include "qcatalan/qpoly.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace qcatalan {

using Json = nlohmann::ordered_json;

inline Json to_json(const QPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return Json{{"min_deg", p.min_deg()}, {"coeffs", coeffs}};
}

inline QPoly qpoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("min_deg") || !j.contains("coeffs"))
        throw DomainError("QPoly JSON must carry min_deg and coeffs");
    std::vector<BigInt> cs;
    for (const auto& c : j.at("coeffs")) cs.emplace_back(c.get<std::string>());
    return QPoly::from_coeffs(j.at("min_deg").get<int>(), std::move(cs));
}

inline Json to_json(const PathStats& st) {
    Json j{{"maj", st.maj},
           {"des", st.des},
           {"height", st.height},
           {"end_level", st.end_level},
           {"min_level", st.min_level}};
    j["h_minus"] = st.h_minus ? Json(*st.h_minus) : Json(nullptr);
    j["h_plus"] = st.h_plus ? Json(*st.h_plus) : Json(nullptr);
    return j;
}

inline Json path_listing_json(const std::vector<LatticePath>& paths, bool with_stats) {
    Json out = Json::array();
    for (const auto& p : paths) {
        if (!with_stats) {
            out.push_back(p.to_string());
            continue;
        }
        Json row{{"path", p.to_string()}};
        Json st = to_json(stats(p));
        row.update(st);
        out.push_back(std::move(row));
    }
    return out;
}

inline Json to_json(const BijectionTrace& t) {
    Json landmarks = Json::object();
    for (const auto& [label, value] : t.landmarks) {
        if (std::holds_alternative<int>(value))
            landmarks[label] = std::get<int>(value);
        else {
            const auto& w = std::get<WedgeRange>(value);
            landmarks[label] = Json::array({w.begin_point, w.end_point});
        }
    }
    Json j{{"name", t.name}, {"input", t.input.to_string()}, {"output", t.output.to_string()}};
    j["case"] = t.case_taken
                    ? Json(*t.case_taken == BijectionCase::Case1 ? "case1" : "case2")
                    : Json(nullptr);
    j["landmarks"] = std::move(landmarks);
    j["stat_delta"] = Json{{"maj", t.stat_delta.maj}, {"des", t.stat_delta.des}};
    return j;
}

inline Json params_json(const std::vector<std::pair<std::string, ParamValue>>& params) {
    Json j = Json::object();
    for (const auto& [k, v] : params) {
        if (std::holds_alternative<long long>(v))
            j[k] = std::get<long long>(v);
        else
            j[k] = std::get<std::string>(v);
    }
    return j;
}

inline Json to_json(const VerificationReport& r) {
    Json j{{"identity", r.identity},
           {"params", params_json(r.params)},
           {"status", to_string(r.status)}};
    if (r.witness) {
        Json w;
        w["lhs"] = r.witness->lhs ? to_json(*r.witness->lhs) : Json(nullptr);
        w["rhs"] = r.witness->rhs ? to_json(*r.witness->rhs) : Json(nullptr);
        w["note"] = r.witness->note;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline Json to_json(const std::vector<VerificationReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

// ---- CSV -----------------------------------------------------------------

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

inline std::string params_text(const std::vector<std::pair<std::string, ParamValue>>& params) {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) s += ";";
        s += k + "=";
        s += std::holds_alternative<long long>(v) ? std::to_string(std::get<long long>(v))
                                                  : std::get<std::string>(v);
    }
    return s;
}

}  // namespace detail

inline std::string report_csv_header() {
    return "identity,params,status,note,lhs,rhs,elapsed_ms";
}

inline std::string report_csv_row(const VerificationReport& r) {
    std::ostringstream out;
    out << detail::csv_escape(r.identity) << "," << detail::csv_escape(detail::params_text(r.params))
        << "," << to_string(r.status) << ",";
    if (r.witness) out << detail::csv_escape(r.witness->note);
    out << ",";
    if (r.witness && r.witness->lhs) out << detail::csv_escape(to_string(*r.witness->lhs));
    out << ",";
    if (r.witness && r.witness->rhs) out << detail::csv_escape(to_string(*r.witness->rhs));
    out << "," << r.elapsed_ms;
    return out.str();
}

inline std::string reports_csv(const std::vector<VerificationReport>& reports) {
    std::string out = report_csv_header() + "\n";
    for (const auto& r : reports) out += report_csv_row(r) + "\n";
    return out;
}

}  // namespace qcatalan
