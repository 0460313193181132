#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "holecov/io.hpp"
#include "holecov/triangulation.hpp"

namespace holecov {

namespace detail {

inline std::string fmt3(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    return s == "-0.000" ? "0.000" : s;
}

inline const char* case_fill(CaseLabel label)
{
    switch (label) {
    case CaseLabel::A: return "#d62728";
    case CaseLabel::B: return "#ff7f0e";
    case CaseLabel::C: return "#bcbd22";
    case CaseLabel::D: return "#9467bd";
    case CaseLabel::E: return "#8c564b";
    case CaseLabel::F: return "#7f7f7f";
    case CaseLabel::G: return "#e377c2";
    case CaseLabel::H: return "#17becf";
    case CaseLabel::I: return "#1f77b4";
    }
    return "#000000";
}

class SvgCanvas {
public:
    SvgCanvas(double width, double height)
        : height_(height), scale_(kPixels / std::max(width, height))
    {
    }

    double px(double v) const { return kMargin + v * scale_; }
    double py(double v) const { return kMargin + (height_ - v) * scale_; }
    std::string x(double v) const { return fmt3(px(v)); }
    std::string y(double v) const { return fmt3(py(v)); }
    std::string len(double v) const { return fmt3(v * scale_); }
    double pixels(double v) const { return kMargin * 2 + v * scale_; }

private:
    static constexpr double kPixels = 800.0;
    static constexpr double kMargin = 20.0;
    double height_;
    double scale_;
};

} // namespace detail

/// Deterministic SVG of the field: boundary, sensing disks, triangulation
/// edges, hole triangles shaded by case, target markers and movement arrows.
inline std::string render_svg(const ScenarioFile& scenario, const std::optional<ReportFile>& report = std::nullopt)
{
    const auto& field = scenario.field;
    validate(field);
    if (report) {
        detail::require_same_scenario(scenario, *report);
    }
    const detail::SvgCanvas c(field.width, field.height);
    std::string out;
    auto line = [&](const std::string& s) { out += s + "\n"; };

    line("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt3(c.pixels(field.width)) +
         "\" height=\"" + detail::fmt3(c.pixels(field.height)) + "\">");
    line("<defs><marker id=\"arrowhead\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#000000\"/></marker></defs>");
    line("<rect class=\"field\" x=\"" + c.x(0) + "\" y=\"" + c.y(field.height) + "\" width=\"" + c.len(field.width) +
         "\" height=\"" + c.len(field.height) + "\" fill=\"#ffffff\" stroke=\"#000000\"/>");

    auto position_of = [&](SensorId id) {
        const auto* node = field.find_stationary(id);
        if (node == nullptr) {
            fail(ErrorCode::InconsistentInput, "report references unknown sensor " + to_string(id));
        }
        return node->position;
    };

    if (report && report->triangles) {
        for (const auto& t : *report->triangles) {
            if (!t.is_hole) {
                continue;
            }
            std::string points;
            for (auto id : t.vertices) {
                const Point p = position_of(id);
                points += (points.empty() ? "" : " ") + c.x(p.x) + "," + c.y(p.y);
            }
            line("<polygon class=\"hole case-" + std::string(to_string(t.label)) + "\" points=\"" + points +
                 "\" fill=\"" + detail::case_fill(t.label) + "\" fill-opacity=\"0.6\"/>");
        }
    }

    std::optional<TriMesh> mesh;
    try {
        mesh = triangulate(field);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InsufficientSites) {
            throw;
        }
    }
    if (mesh) {
        std::set<std::pair<SensorId, SensorId>> edges;
        for (const auto& cell : mesh->cells) {
            for (int k = 0; k < 3; ++k) {
                edges.insert(std::minmax(cell.sites[k], cell.sites[(k + 1) % 3]));
            }
        }
        for (const auto& [a, b] : edges) {
            const Point p = position_of(a);
            const Point q = position_of(b);
            line("<line class=\"edge\" x1=\"" + c.x(p.x) + "\" y1=\"" + c.y(p.y) + "\" x2=\"" + c.x(q.x) +
                 "\" y2=\"" + c.y(q.y) + "\" stroke=\"#555555\" stroke-width=\"0.5\"/>");
        }
    }

    for (const auto& node : field.stationary) {
        line("<circle class=\"disk stationary\" cx=\"" + c.x(node.position.x) + "\" cy=\"" + c.y(node.position.y) +
             "\" r=\"" + c.len(field.sensing_radius) + "\" fill=\"#2ca02c\" fill-opacity=\"0.15\"/>");
        line("<circle class=\"sensor\" cx=\"" + c.x(node.position.x) + "\" cy=\"" + c.y(node.position.y) +
             "\" r=\"2.000\" fill=\"#000000\"/>");
    }
    for (const auto& node : field.mobile) {
        line("<circle class=\"disk mobile\" cx=\"" + c.x(node.position.x) + "\" cy=\"" + c.y(node.position.y) +
             "\" r=\"" + c.len(node.sensing_radius) + "\" fill=\"#1f77b4\" fill-opacity=\"0.15\"/>");
        line("<rect class=\"mobile\" x=\"" + detail::fmt3(c.px(node.position.x) - 3) + "\" y=\"" +
             detail::fmt3(c.py(node.position.y) - 3) + "\" width=\"6.000\" height=\"6.000\" fill=\"#1f77b4\"/>");
    }

    if (report && report->plan) {
        const auto& plan = report->plan->plan;
        auto marker = [&](const TargetLocation& t) {
            const double px = c.px(t.point.x);
            const double py = c.py(t.point.y);
            line("<path class=\"target\" d=\"M" + detail::fmt3(px - 5) + "," + detail::fmt3(py - 5) + " L" +
                 detail::fmt3(px + 5) + "," + detail::fmt3(py + 5) + " M" + detail::fmt3(px - 5) + "," +
                 detail::fmt3(py + 5) + " L" + detail::fmt3(px + 5) + "," + detail::fmt3(py - 5) +
                 "\" stroke=\"#d62728\" stroke-width=\"2\"/>");
        };
        for (const auto& a : plan.assignments) {
            marker(a.target);
        }
        for (const auto& t : plan.unserved) {
            marker(t);
        }
        for (const auto& a : plan.assignments) {
            auto it = std::find_if(field.mobile.begin(), field.mobile.end(),
                                   [&](const MobileNode& m) { return m.id == a.mobile; });
            if (it == field.mobile.end()) {
                fail(ErrorCode::InconsistentInput, "plan moves unknown mobile sensor " + to_string(a.mobile));
            }
            line("<line class=\"arrow\" x1=\"" + c.x(it->position.x) + "\" y1=\"" + c.y(it->position.y) +
                 "\" x2=\"" + c.x(a.target.point.x) + "\" y2=\"" + c.y(a.target.point.y) +
                 "\" stroke=\"#000000\" stroke-width=\"1\" marker-end=\"url(#arrowhead)\"/>");
        }
    }
    line("</svg>");
    return out;
}

} // namespace holecov
