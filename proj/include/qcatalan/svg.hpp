#pragma once
// svg.hpp - Deterministic SVG pictures of lattice paths: a unit grid, the
// path polyline, and optional landmark labels taken from a bijection trace.
// All geometry is integer arithmetic, so equal inputs give byte-identical
// output.

#include "qcatalan/bijections.hpp"
#include "qcatalan/paths.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qcatalan {

namespace detail {

constexpr int kSvgUnit = 32;
constexpr int kSvgMargin = 24;
constexpr int kSvgCaption = 20;

inline void append_path_group(std::ostringstream& out, const LatticePath& p, int offset_y,
                              const std::map<std::string, LandmarkValue>& landmarks,
                              const std::string& caption) {
    auto lv = p.levels();
    int lo = 0, hi = 0;
    for (int v : lv) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    auto X = [](int point) { return kSvgMargin + point * kSvgUnit; };
    auto Y = [&](int level) { return offset_y + kSvgMargin + (hi - level) * kSvgUnit; };

    out << "<g>\n";
    // grid
    for (int x = 0; x <= p.length(); ++x)
        out << "<line x1=\"" << X(x) << "\" y1=\"" << Y(hi) << "\" x2=\"" << X(x) << "\" y2=\""
            << Y(lo) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (int y = lo; y <= hi; ++y)
        out << "<line x1=\"" << X(0) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(p.length())
            << "\" y2=\"" << Y(y) << "\" stroke=\"" << (y == 0 ? "#999999" : "#dddddd")
            << "\" stroke-width=\"1\"/>\n";
    // the path
    out << "<polyline fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"2\" points=\"";
    for (int j = 0; j <= p.length(); ++j) {
        if (j) out << " ";
        out << X(j) << "," << Y(lv[static_cast<size_t>(j)]);
    }
    out << "\"/>\n";
    // landmarks
    for (const auto& [label, value] : landmarks) {
        if (std::holds_alternative<int>(value)) {
            int j = std::get<int>(value);
            if (j < 0 || j > p.length()) continue;
            out << "<circle cx=\"" << X(j) << "\" cy=\"" << Y(lv[static_cast<size_t>(j)])
                << "\" r=\"4\" fill=\"#c0392b\"/>\n";
            out << "<text x=\"" << X(j) + 6 << "\" y=\"" << Y(lv[static_cast<size_t>(j)]) - 6
                << "\" font-family=\"monospace\" font-size=\"14\" fill=\"#c0392b\">" << label
                << "</text>\n";
        } else {
            const auto& w = std::get<WedgeRange>(value);
            if (w.begin_point < 0 || w.end_point > p.length() || w.empty()) continue;
            out << "<rect x=\"" << X(w.begin_point) << "\" y=\"" << Y(hi) << "\" width=\""
                << (w.end_point - w.begin_point) * kSvgUnit << "\" height=\""
                << (hi - lo) * kSvgUnit << "\" fill=\"#f7d794\" fill-opacity=\"0.35\"/>\n";
            out << "<text x=\"" << X(w.begin_point) << "\" y=\"" << Y(lo) + 16
                << "\" font-family=\"monospace\" font-size=\"14\" fill=\"#b07d1a\">" << label
                << "</text>\n";
        }
    }
    if (!caption.empty())
        out << "<text x=\"" << X(0) << "\" y=\"" << Y(lo) + kSvgCaption + 14
            << "\" font-family=\"monospace\" font-size=\"14\" fill=\"#333333\">" << caption
            << "</text>\n";
    out << "</g>\n";
}

inline int group_height(const LatticePath& p) {
    auto lv = p.levels();
    int lo = 0, hi = 0;
    for (int v : lv) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return 2 * kSvgMargin + (hi - lo) * kSvgUnit + kSvgCaption + 18;
}

}  // namespace detail

/// One path; landmark labels (point markers, wedge shading) are optional.
inline std::string render_path_svg(const LatticePath& p,
                                   const std::map<std::string, LandmarkValue>& landmarks = {},
                                   const std::string& caption = "") {
    int width = 2 * detail::kSvgMargin + std::max(1, p.length()) * detail::kSvgUnit;
    int height = detail::group_height(p);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    detail::append_path_group(out, p, 0, landmarks, caption.empty() ? p.to_string() : caption);
    out << "</svg>\n";
    return out.str();
}

namespace detail {

// Landmarks live on either the input or the output path; the split differs
// per map because g and g_inv move points around. Everything not listed
// here (L, Q, sigma, N after a splice) belongs to the image side.
inline bool landmark_on_input(const std::string& map_name, const std::string& label) {
    if (map_name == "psi") return label == "R";
    if (map_name == "psi_inv") return label == "L";
    if (map_name == "f") return label == "R";
    if (map_name == "f_inv") return label == "Q";
    if (map_name == "g")
        return label == "R" || label == "N" || label == "M" || label == "X" || label == "Y";
    if (map_name == "g_inv")
        return label == "Q" || label == "L" || label == "X" || label == "M" || label == "Y";
    return false;
}

}  // namespace detail

/// Two stacked panels in one document: the input path with the landmarks
/// that live on it, then the image path with the rest.
inline std::string render_trace_svg(const BijectionTrace& t) {
    std::map<std::string, LandmarkValue> on_input, on_output;
    for (const auto& [label, value] : t.landmarks) {
        if (detail::landmark_on_input(t.name, label))
            on_input[label] = value;
        else
            on_output[label] = value;
    }
    int width = 2 * detail::kSvgMargin +
                detail::kSvgUnit * std::max({1, t.input.length(), t.output.length()});
    int height = detail::group_height(t.input) + detail::group_height(t.output);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    detail::append_path_group(out, t.input, 0, on_input, t.name + " input  " +
                                                             t.input.to_string());
    detail::append_path_group(out, t.output, detail::group_height(t.input), on_output,
                              t.name + " output  " + t.output.to_string());
    out << "</svg>\n";
    return out.str();
}

/// Every member of a small family, stacked top to bottom in enumeration
/// order with its word as caption.
inline std::string render_family_svg(const FamilySpec& spec) {
    auto paths = all_paths_in(spec);
    int width = 2 * detail::kSvgMargin + detail::kSvgUnit;
    int height = detail::kSvgMargin;
    for (const auto& p : paths) {
        width = std::max(width, 2 * detail::kSvgMargin + std::max(1, p.length()) * detail::kSvgUnit);
        height += detail::group_height(p);
    }
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    int offset = 0;
    for (const auto& p : paths) {
        detail::append_path_group(out, p, offset, {}, p.to_string());
        offset += detail::group_height(p);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace qcatalan
