#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "holecov/assignment.hpp"
#include "holecov/error.hpp"
#include "holecov/geometry.hpp"
#include "holecov/hole_analysis.hpp"
#include "holecov/sensor_field.hpp"
#include "holecov/triangulation.hpp"

namespace holecov {

enum class TargetKind { Circumcenter, Incenter };

constexpr std::string_view to_string(TargetKind kind) noexcept
{
    return kind == TargetKind::Circumcenter ? "circumcenter" : "incenter";
}

struct TargetLocation {
    CellId cell;
    Point point;
    TargetKind kind = TargetKind::Circumcenter;
    double hole_area = 0.0;

    friend bool operator==(const TargetLocation&, const TargetLocation&) = default;
};

struct Assignment {
    SensorId mobile;
    TargetLocation target;
    double distance = 0.0;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct HealingPlan {
    std::vector<Assignment> assignments;
    double total_movement = 0.0;
    std::vector<TargetLocation> unserved;

    friend bool operator==(const HealingPlan&, const HealingPlan&) = default;
};

/// Circumcenter when the hole fits in one mobile sensing disk
/// (s_h ≤ π·R_m², ties included), incenter otherwise.
inline TargetKind target_kind_for(double hole_area, double mobile_radius) noexcept
{
    return hole_area <= std::numbers::pi * mobile_radius * mobile_radius ? TargetKind::Circumcenter
                                                                          : TargetKind::Incenter;
}

inline TargetLocation select_target(const HoleReport& report, const TriangleGeom& tri, double mobile_radius)
{
    if (!report.is_hole) {
        fail(ErrorCode::InvalidInput, "cell " + to_string(report.cell) + " has no hole to heal");
    }
    if (!std::isfinite(mobile_radius) || mobile_radius <= 0.0) {
        fail(ErrorCode::InvalidInput, "mobile sensing radius must be positive");
    }
    TargetLocation target;
    target.cell = report.cell;
    target.hole_area = report.area();
    target.kind = target_kind_for(report.area(), mobile_radius);
    target.point = target.kind == TargetKind::Circumcenter ? circumcenter(tri).first : incenter(tri).first;
    return target;
}

/// One target per reported hole, in report order.
inline std::vector<TargetLocation> select_targets(std::span<const HoleReport> reports, const TriMesh& mesh,
                                                  double mobile_radius)
{
    std::vector<TargetLocation> targets;
    for (const auto& report : reports) {
        if (report.is_hole) {
            targets.push_back(select_target(report, mesh.cell(report.cell).geom, mobile_radius));
        }
    }
    return targets;
}

/// Assigns mobile sensors to targets with minimum total travel. When targets
/// outnumber mobiles the largest holes are served and the rest reported
/// unserved; surplus mobiles stay where they are.
inline HealingPlan plan_relocation(std::span<const TargetLocation> targets, const SensorField& field)
{
    std::vector<TargetLocation> ranked(targets.begin(), targets.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const TargetLocation& l, const TargetLocation& r) {
        if (l.hole_area != r.hole_area) {
            return l.hole_area > r.hole_area;
        }
        return l.cell < r.cell;
    });

    std::vector<MobileNode> mobiles = field.mobile;
    std::sort(mobiles.begin(), mobiles.end(), [](const MobileNode& l, const MobileNode& r) { return l.id < r.id; });

    HealingPlan plan;
    const std::size_t served = std::min(ranked.size(), mobiles.size());
    plan.unserved.assign(ranked.begin() + static_cast<std::ptrdiff_t>(served), ranked.end());
    if (served == 0) {
        return plan;
    }

    std::vector<double> cost(served * mobiles.size());
    for (std::size_t t = 0; t < served; ++t) {
        for (std::size_t m = 0; m < mobiles.size(); ++m) {
            cost[t * mobiles.size() + m] = distance(ranked[t].point, mobiles[m].position);
        }
    }
    const auto choice = min_cost_assignment(cost, served, mobiles.size());
    for (std::size_t t = 0; t < served; ++t) {
        const auto& mobile = mobiles[choice[t]];
        plan.assignments.push_back({mobile.id, ranked[t], cost[t * mobiles.size() + choice[t]]});
    }
    std::sort(plan.assignments.begin(), plan.assignments.end(),
              [](const Assignment& l, const Assignment& r) { return l.mobile < r.mobile; });
    for (const auto& a : plan.assignments) {
        plan.total_movement += a.distance;
    }
    return plan;
}

/// Copy of `field` with every assigned mobile moved onto its target.
inline SensorField apply_plan(SensorField field, const HealingPlan& plan)
{
    for (const auto& assignment : plan.assignments) {
        auto it = std::find_if(field.mobile.begin(), field.mobile.end(),
                               [&](const MobileNode& node) { return node.id == assignment.mobile; });
        if (it == field.mobile.end()) {
            fail(ErrorCode::InconsistentInput, "plan moves unknown mobile sensor " + to_string(assignment.mobile));
        }
        it->position = assignment.target.point;
    }
    return field;
}

} // namespace holecov
