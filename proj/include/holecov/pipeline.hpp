#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "holecov/coverage_oracle.hpp"
#include "holecov/healing.hpp"
#include "holecov/hole_analysis.hpp"
#include "holecov/io.hpp"
#include "holecov/random.hpp"
#include "holecov/triangulation.hpp"

namespace holecov {

struct GenerateParams {
    double width = 0.0;
    double height = 0.0;
    std::size_t n_stationary = 0;
    std::size_t n_mobile = 0;
    double radius = 0.0;
    double mobile_radius = 0.0;
    std::uint64_t seed = 0;
};

/// Uniform random deployment. Stationary sensors get ids 1..N and mobile
/// sensors N+1..N+M; stationary positions are drawn first.
inline ScenarioFile generate_scenario(const GenerateParams& p)
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(p.width) || !positive(p.height)) {
        fail(ErrorCode::InvalidInput, "field width and height must be positive");
    }
    if (!positive(p.radius) || !positive(p.mobile_radius)) {
        fail(ErrorCode::InvalidInput, "sensing radii must be positive");
    }
    if (p.n_stationary < 3) {
        fail(ErrorCode::InvalidInput, "at least 3 stationary sensors are required, got " +
                                          std::to_string(p.n_stationary));
    }
    SeededStream stream(p.seed);
    auto draw = [&] {
        const double x = std::clamp(round9(stream.uniform(0.0, p.width)), 0.0, p.width);
        const double y = std::clamp(round9(stream.uniform(0.0, p.height)), 0.0, p.height);
        return Point{x, y};
    };
    ScenarioFile scenario;
    scenario.field.width = round9(p.width);
    scenario.field.height = round9(p.height);
    scenario.field.sensing_radius = round9(p.radius);
    for (std::size_t i = 0; i < p.n_stationary; ++i) {
        scenario.field.stationary.push_back({SensorId{i + 1}, draw()});
    }
    for (std::size_t i = 0; i < p.n_mobile; ++i) {
        scenario.field.mobile.push_back({SensorId{p.n_stationary + i + 1}, draw(), round9(p.mobile_radius)});
    }
    scenario.meta = {{"generator", "uniform"},
                     {"n_mobile", p.n_mobile},
                     {"n_stationary", p.n_stationary},
                     {"seed", p.seed}};
    validate(scenario.field);
    return scenario;
}

inline std::string to_string(MethodOption option)
{
    switch (option) {
    case MethodOption::Auto: return "auto";
    case MethodOption::CaseOnly: return "case";
    case MethodOption::ExactOnly: return "exact";
    }
    return "auto";
}

inline std::optional<MethodOption> parse_method_option(std::string_view text) noexcept
{
    if (text == "auto") {
        return MethodOption::Auto;
    }
    if (text == "case") {
        return MethodOption::CaseOnly;
    }
    if (text == "exact") {
        return MethodOption::ExactOnly;
    }
    return std::nullopt;
}

/// Triangulates the field and records every cell's label and hole area,
/// listed by cell id.
inline ReportFile run_detect(const ScenarioFile& scenario, const DetectOptions& options = {})
{
    validate(scenario.field);
    const auto mesh = triangulate(scenario.field);
    auto holes = detect_holes(scenario.field, mesh, options);
    std::sort(holes.begin(), holes.end(), [](const HoleReport& l, const HoleReport& r) { return l.cell < r.cell; });

    ReportFile report;
    report.scenario_hash = scenario_hash(scenario.field);
    report.triangles.emplace();
    std::size_t hole_count = 0;
    for (const auto& h : holes) {
        report.triangles->push_back({h.cell, h.sites, h.label, round9(h.area()), h.computation.method, h.is_hole});
        hole_count += h.is_hole ? 1 : 0;
    }
    report.meta = {{"epsilon", round9(options.epsilon.value_or(default_hole_epsilon(scenario.field.sensing_radius)))},
                   {"holes", hole_count},
                   {"mesh", {{"cells", mesh.cells.size()},
                             {"hull", mesh.hull.size()},
                             {"sites", scenario.field.stationary.size()}}},
                   {"method", to_string(options.method)}};
    return canonical(report);
}

/// Chooses a target for every hole in the report and assigns mobile sensors.
/// Any earlier plan or verification in the report is replaced.
inline ReportFile run_plan(const ScenarioFile& scenario, const ReportFile& report, double mobile_radius)
{
    detail::require_same_scenario(scenario, report);
    if (!report.triangles) {
        fail(ErrorCode::InconsistentInput, "report has no triangles to plan from");
    }
    if (!std::isfinite(mobile_radius) || mobile_radius <= 0.0) {
        fail(ErrorCode::InvalidInput, "mobile sensing radius must be positive");
    }
    mobile_radius = round9(mobile_radius);
    const auto mesh = triangulate(scenario.field);
    std::vector<TargetLocation> targets;
    for (const auto& record : *report.triangles) {
        if (!record.is_hole) {
            continue;
        }
        if (!mesh.contains(record.id) || mesh.cell(record.id).sites != record.vertices) {
            fail(ErrorCode::InconsistentInput,
                 "triangle " + to_string(record.id) + " does not match the scenario's triangulation");
        }
        HoleReport hole;
        hole.cell = record.id;
        hole.sites = record.vertices;
        hole.label = record.label;
        hole.computation.s_h = record.s_h;
        hole.computation.method = record.method;
        hole.is_hole = true;
        targets.push_back(select_target(hole, mesh.cell(record.id).geom, mobile_radius));
    }
    ReportFile out = report;
    out.plan = PlanRecord{mobile_radius, plan_relocation(targets, scenario.field)};
    out.verify.reset();
    return canonical(out);
}

/// Monte-Carlo coverage before and after the report's plan, both drawn from
/// the same seed. Without a plan `after` equals `before`.
inline ReportFile run_verify(const ScenarioFile& scenario, const std::optional<ReportFile>& report,
                             std::uint64_t samples, std::uint64_t seed)
{
    validate(scenario.field);
    ReportFile out;
    if (report) {
        detail::require_same_scenario(scenario, *report);
        out = *report;
    } else {
        out.scenario_hash = scenario_hash(scenario.field);
    }
    const auto before = mc_coverage_fraction(scenario.field, samples, seed);
    auto after = before;
    if (out.plan) {
        after = mc_coverage_fraction(apply_plan(scenario.field, out.plan->plan), samples, seed);
    }
    out.verify = VerifyRecord{before.covered_fraction, after.covered_fraction, samples, seed,
                              std::hypot(before.half_width, after.half_width)};
    return canonical(out);
}

} // namespace holecov
