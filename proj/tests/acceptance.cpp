// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
//
//   acceptance [--cli PATH] [--work-dir DIR]
//
// Without --cli the determinism criterion checks the in-process pipeline only.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "holecov/holecov.hpp"
#include "oracles.hpp"

using namespace holecov;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

std::array<Disk, 3> disks_at(const TriangleGeom& t, double radius)
{
    return {Disk{t.vertices[0], radius}, Disk{t.vertices[1], radius}, Disk{t.vertices[2], radius}};
}

// Independent closed form for the lens of two equal disks.
double equal_lens(double radius, double d)
{
    if (d >= 2 * radius) {
        return 0.0;
    }
    return 2 * radius * radius * std::acos(d / (2 * radius)) - 0.5 * d * std::sqrt(4 * radius * radius - d * d);
}

// ---------------------------------------------------------------------------

Outcome lens_goldens()
{
    Outcome out;
    const double unit = lens_area(1, 1, 1).area;
    const double expected = 2 * std::acos(0.5) - std::sqrt(3.0) / 2;
    const double contained = lens_area(1, 0.5, 0).area;
    const double touching = lens_area(1, 1, 2).area;
    out.pass = std::abs(unit - expected) <= 1e-6 && std::abs(unit - 1.2283697) <= 1e-6 &&
               std::abs(contained - pi / 4) <= 1e-9 && touching == 0.0;
    out.detail = fmt("lens(1,1,1)=%.9f lens(1,0.5,0)-pi/4=%.1e lens(1,1,2)=%g", unit, contained - pi / 4, touching);
    return out;
}

Outcome hole_goldens()
{
    struct Golden {
        const char* name;
        TriangleGeom tri;
        double closed_form;
        double published;
    };
    const double r3 = std::sqrt(3.0);
    const auto eq19 = triangle_from_vertices({0, 0}, {1.9, 0}, {0.95, 1.9 * r3 / 2});
    const std::vector<Golden> goldens{
        {"equilateral-2", triangle_from_vertices({0, 0}, {2, 0}, {1, r3}), r3 - pi / 2, 0.1612545},
        {"right-3-4-5", triangle_from_vertices({0, 0}, {4, 0}, {0, 3}), 6 - pi / 2, 4.4292037},
        {"one-overlap", triangle_from_vertices({0, 0}, {1.5, 0}, {0.75, 2}), 1.5 - pi / 2 + 0.5 * equal_lens(1, 1.5),
         0.1558596},
        {"equilateral-1.9", eq19, r3 / 4 * 1.9 * 1.9 - pi / 2 + 1.5 * equal_lens(1, 1.9), 0.0551486},
    };
    Outcome out;
    for (const auto& g : goldens) {
        const double s_h = hole_area(g.tri, 1.0).s_h;
        const double grid = grid_region_uncovered(g.tri, disks_at(g.tri, 1.0), 1024);
        const bool ok = std::abs(s_h - g.closed_form) <= 1e-6 && std::abs(s_h - g.published) <= 1e-6 &&
                        std::abs(grid - s_h) <= 5e-3 * s_h;
        out.pass = out.pass && ok;
        out.detail += fmt("%s%s=%.7f (grid %+.2f%%)", out.detail.empty() ? "" : " ", g.name, s_h,
                          100 * (grid - s_h) / s_h);
    }
    return out;
}

// Shared sweep: 500 seeded triangles, three radii each, spanning large holes
// to full coverage.
struct SweepCase {
    TriangleGeom tri;
    double radius;
};

std::vector<SweepCase> sweep_cases()
{
    SeededStream stream(2024);
    std::vector<SweepCase> cases;
    for (int k = 0; k < 500; ++k) {
        const auto v = oracle::random_triangle(stream, 0.0);
        const auto tri = triangle_from_vertices(v[0], v[1], v[2]);
        const double reach = min_enclosing_radius(tri);
        cases.push_back({tri, stream.uniform(0.2, 0.6) * reach});
        cases.push_back({tri, stream.uniform(0.6, 0.9) * reach});
        cases.push_back({tri, stream.uniform(0.9, 1.2) * reach});
    }
    return cases;
}

// The grid oracle's error is first order in the cell size, so resolution is
// doubled until two successive estimates agree to half the tolerance.
constexpr int kSweepStartResolution = 1024;
constexpr int kSweepMaxResolution = 16384;

// Rigid copy with the longest side on the x-axis. The grid oracle rasterizes
// the bounding box, which for a sliver in a diagonal pose is almost empty.
TriangleGeom longest_side_on_axis(const TriangleGeom& t)
{
    int k = 0;
    for (int i = 1; i < 3; ++i) {
        k = t.side(i) > t.side(k) ? i : k;
    }
    // side k is opposite vertex k
    const Point origin = t.vertices[(k + 1) % 3];
    const Point along = t.vertices[(k + 2) % 3] - origin;
    const double len = std::hypot(along.x, along.y);
    const double c = along.x / len;
    const double s = along.y / len;
    auto place = [&](Point p) {
        const Point q = p - origin;
        return Point{c * q.x + s * q.y, -s * q.x + c * q.y};
    };
    return triangle_from_vertices(place(t.vertices[0]), place(t.vertices[1]), place(t.vertices[2]));
}

Outcome oracle_sweep(const std::vector<SweepCase>& cases)
{
    Outcome out;
    int failures = 0;
    double worst = 0.0;
    std::map<int, int> final_resolution;
    for (const auto& c : cases) {
        const double s_h = hole_area(c.tri, c.radius).s_h;
        const double tolerance = std::max(5e-3 * s_h, 1e-4 * c.tri.area);
        const auto posed = longest_side_on_axis(c.tri);
        const auto disks = disks_at(posed, c.radius);
        int resolution = kSweepStartResolution;
        double coarse = grid_region_uncovered(posed, disks, resolution);
        double grid = coarse;
        while (resolution < kSweepMaxResolution) {
            resolution *= 2;
            grid = grid_region_uncovered(posed, disks, resolution);
            if (std::abs(grid - coarse) <= tolerance / 2) {
                break;
            }
            coarse = grid;
        }
        ++final_resolution[resolution];
        const double err = std::abs(grid - s_h);
        failures += err <= tolerance ? 0 : 1;
        worst = std::max(worst, err / tolerance);
    }
    std::string spread;
    for (const auto& [res, n] : final_resolution) {
        spread += fmt("%s%d@%d", spread.empty() ? "" : " ", n, res);
    }
    out.pass = failures == 0;
    out.detail = fmt("%zu instances, %d outside tolerance, worst error/tolerance %.3f; resolutions used: %s",
                     cases.size(), failures, worst, spread.c_str());
    return out;
}

Outcome case_vs_exact(const std::vector<SweepCase>& cases)
{
    Outcome out;
    int valid = 0;
    int failures = 0;
    double worst = 0.0;
    for (const auto& c : cases) {
        const auto closed = case_formula_hole_area(c.tri, c.radius);
        if (!closed.validity.all()) {
            continue;
        }
        ++valid;
        const double rel = std::abs(closed.s_h - exact_uncovered_area(c.tri, c.radius)) / c.tri.area;
        worst = std::max(worst, rel);
        failures += rel < 1e-6 ? 0 : 1;
    }
    out.pass = failures == 0 && valid > 0;
    out.detail = fmt("%d of %zu instances satisfy the validity predicate, %d disagree, worst |case-exact|/area %.1e",
                     valid, cases.size(), failures, worst);
    return out;
}

Outcome center_constructions()
{
    Outcome out;
    SeededStream stream(55);
    double worst_circ = 0.0;
    double worst_in = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto v = oracle::random_triangle(stream, 1e-3);
        const auto tri = triangle_from_vertices(v[0], v[1], v[2]);
        const auto [cc, cr] = circumcenter(tri);
        for (const Point& p : v) {
            worst_circ = std::max(worst_circ, std::abs(std::hypot(p.x - cc.x, p.y - cc.y) - cr) / cr);
        }
        const auto [ic, ir] = incenter(tri);
        for (int i = 0; i < 3; ++i) {
            const Point a = v[i];
            const Point b = v[(i + 1) % 3];
            const double side = std::hypot(b.x - a.x, b.y - a.y);
            const double dist = std::abs((b.x - a.x) * (ic.y - a.y) - (b.y - a.y) * (ic.x - a.x)) / side;
            worst_in = std::max(worst_in, std::abs(dist - ir) / ir);
        }
    }
    const auto [c345, r345] = incenter(triangle_from_vertices({0, 0}, {4, 0}, {0, 3}));
    const double err345 = std::max({std::abs(c345.x - 1), std::abs(c345.y - 1), std::abs(r345 - 1)});
    out.pass = worst_circ <= 1e-9 && worst_in <= 1e-9 && err345 <= 1e-12;
    out.detail = fmt("worst circumcenter spread %.1e, worst incenter spread %.1e, 3-4-5 incenter error %.1e",
                     worst_circ, worst_in, err345);
    return out;
}

Outcome delaunay_properties()
{
    Outcome out;
    std::string counts;
    for (std::uint64_t seed : {101u, 202u, 303u}) {
        SeededStream stream(seed);
        SensorField field;
        field.width = 1000;
        field.height = 1000;
        field.sensing_radius = 1;
        std::vector<Point> pts;
        for (std::size_t i = 0; i < 1000; ++i) {
            pts.push_back({stream.uniform(0, 1000), stream.uniform(0, 1000)});
            field.stationary.push_back({SensorId{i + 1}, pts.back()});
        }
        const auto mesh = triangulate(field);
        std::size_t violations = 0;
        for (const auto& cell : mesh.cells) {
            const auto [center, radius] = circumcenter(cell.geom);
            for (const Point& p : pts) {
                violations += std::hypot(p.x - center.x, p.y - center.y) < radius * (1 - 1e-9) ? 1 : 0;
            }
        }
        const std::size_t hull = oracle::brute_force_hull_points(pts).size();
        const std::size_t expected = 2 * pts.size() - 2 - hull;
        out.pass = out.pass && violations == 0 && mesh.cells.size() == expected;
        counts += fmt("%s%zu/%zu cells (h=%zu, %zu violations)", counts.empty() ? "" : "; ", mesh.cells.size(),
                      expected, hull, violations);
    }
    out.detail = counts;
    return out;
}

Outcome healing_gain(ReportFile& healed_out)
{
    const auto scenario = generate_scenario({100, 100, 50, 5, 10, 10, 42});
    const auto planned = run_plan(scenario, run_detect(scenario), 10.0);
    healed_out = run_verify(scenario, planned, 1000000, 7);
    const auto& v = *healed_out.verify;
    Outcome out;
    out.pass = v.after - v.before > 3 * v.half_width;
    out.detail = fmt("before %.6f after %.6f gain %.6f vs 3x combined half-width %.6f (%zu mobiles moved)", v.before,
                     v.after, v.after - v.before, 3 * v.half_width, planned.plan->plan.assignments.size());
    return out;
}

Outcome target_rule(const std::vector<SweepCase>& cases, const ReportFile& planned)
{
    Outcome out;
    auto rule = [](double s_h, double rm) {
        return s_h <= pi * rm * rm ? TargetKind::Circumcenter : TargetKind::Incenter;
    };
    std::size_t checked = 0;
    std::size_t wrong = 0;
    SeededStream stream(8);
    for (const auto& c : cases) {
        HoleReport report;
        report.computation = hole_area(c.tri, c.radius);
        report.is_hole = report.computation.s_h > default_hole_epsilon(c.radius);
        if (!report.is_hole) {
            continue;
        }
        const double s_h = report.computation.s_h;
        const double tie = std::sqrt(s_h / pi);
        for (double rm : {tie * stream.uniform(0.5, 1.0), tie * stream.uniform(1.0, 2.0), c.radius}) {
            ++checked;
            wrong += select_target(report, c.tri, rm).kind == rule(s_h, rm) ? 0 : 1;
        }
        // exact equality resolves toward the circumcenter
        const double rm = stream.uniform(0.01, 1.0);
        report.computation.s_h = pi * rm * rm;
        ++checked;
        wrong += select_target(report, c.tri, rm).kind == TargetKind::Circumcenter ? 0 : 1;
    }
    const double rm = planned.plan->mobile_radius;
    for (const auto& a : planned.plan->plan.assignments) {
        ++checked;
        wrong += a.target.kind == rule(a.target.hole_area, rm) ? 0 : 1;
    }
    for (const auto& t : planned.plan->plan.unserved) {
        ++checked;
        wrong += t.kind == rule(t.hole_area, rm) ? 0 : 1;
    }
    out.pass = wrong == 0 && checked > 0;
    out.detail = fmt("%zu target choices checked, %zu break the rule", checked, wrong);
    return out;
}

Outcome assignment_optimality()
{
    Outcome out;
    SeededStream stream(99);
    int mismatches = 0;
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t targets = 1 + stream.bits() % 7;
        const std::size_t mobiles = targets + stream.bits() % (8 - targets);
        SensorField field;
        field.width = 100;
        field.height = 100;
        field.sensing_radius = 1;
        for (std::size_t m = 0; m < mobiles; ++m) {
            field.mobile.push_back({SensorId{m + 1}, {stream.uniform(0, 100), stream.uniform(0, 100)}, 5.0});
        }
        std::vector<TargetLocation> list;
        for (std::size_t t = 0; t < targets; ++t) {
            list.push_back({CellId{static_cast<std::uint32_t>(t)},
                            {stream.uniform(0, 100), stream.uniform(0, 100)},
                            TargetKind::Circumcenter,
                            1.0});
        }
        std::vector<double> cost;
        for (const auto& t : list) {
            for (const auto& m : field.mobile) {
                cost.push_back(std::hypot(t.point.x - m.position.x, t.point.y - m.position.y));
            }
        }
        const double best = oracle::brute_force_min_assignment(cost, targets, mobiles);
        const double got = plan_relocation(list, field).total_movement;
        const double rel = std::abs(got - best) / best;
        worst = std::max(worst, rel);
        mismatches += rel <= 1e-9 ? 0 : 1;
    }
    out.pass = mismatches == 0;
    out.detail = fmt("200 instances, %d differ from the permutation minimum, worst relative gap %.1e", mismatches,
                     worst);
    return out;
}

std::string slurp(const fs::path& path)
{
    try {
        return read_text_file(path.string());
    } catch (const Error&) {
        return "<missing>";
    }
}

std::string shell_quote(const fs::path& p) { return "\"" + p.string() + "\""; }

Outcome determinism(const std::string& cli, const fs::path& work)
{
    Outcome out;
    const std::vector<std::string> files{"scenario.json", "detect.json", "plan.json", "verify.json", "render.svg"};

    // in-process, through serialized text at every stage
    auto in_process = [] {
        const auto scenario = parse_scenario(serialize_scenario(generate_scenario({100, 100, 50, 5, 10, 10, 42})));
        const auto detected = parse_report(serialize_report(run_detect(scenario)));
        const auto planned = parse_report(serialize_report(run_plan(scenario, detected, 10.0)));
        const auto verified = run_verify(scenario, planned, 200000, 7);
        return serialize_scenario(scenario) + serialize_report(detected) + serialize_report(planned) +
               serialize_report(verified) + render_svg(scenario, verified);
    };
    out.pass = in_process() == in_process();
    out.detail = out.pass ? "in-process pipeline identical" : "in-process pipeline differs";

    if (cli.empty()) {
        return out;
    }
    for (const char* run : {"run1", "run2"}) {
        const fs::path dir = work / run;
        fs::remove_all(dir);
        fs::create_directories(dir);
        const std::string c = shell_quote(cli);
        const std::vector<std::string> commands{
            c + " generate --width 100 --height 100 --n-stationary 50 --n-mobile 5 --radius 10 --mobile-radius 10 "
                "--seed 42 --out " + shell_quote(dir / files[0]),
            c + " detect --scenario " + shell_quote(dir / files[0]) + " --method auto --out " + shell_quote(dir / files[1]),
            c + " plan --scenario " + shell_quote(dir / files[0]) + " --report " + shell_quote(dir / files[1]) +
                " --mobile-radius 10 --out " + shell_quote(dir / files[2]),
            c + " verify --scenario " + shell_quote(dir / files[0]) + " --report " + shell_quote(dir / files[2]) +
                " --samples 200000 --seed 7 --out " + shell_quote(dir / files[3]),
            c + " render --scenario " + shell_quote(dir / files[0]) + " --report " + shell_quote(dir / files[3]) + " --out " +
                shell_quote(dir / files[4]),
        };
        for (const auto& command : commands) {
            if (std::system(command.c_str()) != 0) {
                out.pass = false;
                out.detail += "; command failed: " + command;
                return out;
            }
        }
    }
    std::size_t identical = 0;
    for (const auto& f : files) {
        const auto a = slurp(work / "run1" / f);
        identical += a != "<missing>" && a == slurp(work / "run2" / f) ? 1 : 0;
    }
    out.pass = out.pass && identical == files.size();
    out.detail += fmt("; CLI re-run: %zu of %zu files byte-identical", identical, files.size());
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::string cli;
    std::string work_dir = "acceptance_work";
    app.add_option("--cli", cli, "path to the holecov executable");
    app.add_option("--work-dir", work_dir, "scratch directory for CLI outputs");
    CLI11_PARSE(app, argc, argv);

    const auto cases = sweep_cases();
    ReportFile planned;
    bool all = true;
    auto report = [&](int number, const char* name, const std::function<Outcome()>& run) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("threw: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && outcome.pass;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << number << "] " << name << ": " << outcome.detail
                  << fmt(" (%.2fs)", seconds) << std::endl;
    };

    report(1, "lens-area goldens", lens_goldens);
    report(2, "hole-area goldens", hole_goldens);
    report(3, "oracle-equivalence sweep", [&] { return oracle_sweep(cases); });
    report(4, "case-formula/exact agreement", [&] { return case_vs_exact(cases); });
    report(5, "center constructions", center_constructions);
    report(6, "Delaunay properties", delaunay_properties);
    report(7, "healing improves coverage", [&] { return healing_gain(planned); });
    report(8, "target rule conformance", [&] {
        if (!planned.plan) {
            return Outcome{false, "no plan available from criterion 7"};
        }
        return target_rule(cases, planned);
    });
    report(9, "assignment optimality", assignment_optimality);
    report(10, "determinism", [&] { return determinism(cli, work_dir); });
    return all ? 0 : 1;
}
