#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holecov/error.hpp"
#include "holecov/geometry.hpp"
#include "holecov/sensor_field.hpp"
#include "holecov/triangulation.hpp"

namespace holecov {

/// The nine coverage states of a triangle whose three vertex sensors share
/// one sensing radius R.
///
///   A  no pair overlaps (all sides > 2R)
///   B  all three pairs tangent (a = b = c = 2R)
///   C  no pair overlaps and exactly two sides are equal
///   D  exactly one overlapping pair
///   E  exactly two overlapping pairs
///   F  the three disks cover the whole triangle
///   G  one overlapping pair plus a tangent pair (evaluated as D)
///   H  no overlap, some but not all pairs tangent (evaluated as A)
///   I  all three pairs overlap and a hole remains
enum class CaseLabel { A, B, C, D, E, F, G, H, I };

constexpr std::string_view to_string(CaseLabel label) noexcept
{
    constexpr std::array<std::string_view, 9> names{"A", "B", "C", "D", "E", "F", "G", "H", "I"};
    return names[static_cast<std::size_t>(label)];
}

inline std::optional<CaseLabel> parse_case_label(std::string_view text) noexcept
{
    if (text.size() == 1 && text[0] >= 'A' && text[0] <= 'I') {
        return static_cast<CaseLabel>(text[0] - 'A');
    }
    return std::nullopt;
}

enum class HoleMethod { CaseFormula, ExactFallback };

constexpr std::string_view to_string(HoleMethod method) noexcept
{
    return method == HoleMethod::CaseFormula ? "case-formula" : "exact-fallback";
}

/// Which route `hole_area` may take.
enum class MethodOption { Auto, CaseOnly, ExactOnly };

/// |d − 2R| ≤ kTangencyTolerance·R counts as tangency.
inline constexpr double kTangencyTolerance = 1e-9;

inline double default_hole_epsilon(double radius) noexcept { return 1e-9 * radius * radius; }

enum class PairRelation { Overlapping, Tangent, Apart };

inline PairRelation pair_relation(double center_distance, double radius) noexcept
{
    const double gap = center_distance - 2.0 * radius;
    if (std::abs(gap) <= kTangencyTolerance * radius) {
        return PairRelation::Tangent;
    }
    return gap < 0.0 ? PairRelation::Overlapping : PairRelation::Apart;
}

/// Preconditions under which the closed-form hole area is exact.
struct CaseValidity {
    bool sectors_contained = false;
    bool half_lenses_contained = false;
    bool no_triple_overlap = false;

    bool all() const noexcept { return sectors_contained && half_lenses_contained && no_triple_overlap; }
};

/// Half of the lens between the two sensors at the ends of side `side`
/// (side i is opposite vertex i).
struct LensCorrection {
    int side = 0;
    double distance = 0.0;
    double half_lens = 0.0;
};

struct HoleComputation {
    double s_delta = 0.0;
    double sector_sum = 0.0;
    std::vector<LensCorrection> lens_corrections;
    double s_h = 0.0;
    HoleMethod method = HoleMethod::CaseFormula;
    CaseValidity validity;
};

namespace detail {

inline void require_hole_inputs(const TriangleGeom& tri, double radius)
{
    require_non_degenerate(tri);
    if (!std::isfinite(radius) || radius <= 0.0) {
        fail(ErrorCode::InvalidInput, "sensing radius must be positive");
    }
}

/// Largest angle, seen from one centre, spanned by the half of an
/// equal-radius lens on one side of the centre line.
inline double half_lens_angular_extent(double center_distance, double radius) noexcept
{
    if (center_distance <= radius) {
        return std::numbers::pi;
    }
    if (center_distance * center_distance <= 2.0 * radius * radius) {
        return std::asin(radius / center_distance);
    }
    return clamped_acos(center_distance / (2.0 * radius));
}

inline std::array<Disk, 3> vertex_disks(const TriangleGeom& tri, double radius) noexcept
{
    return {Disk{tri.vertices[0], radius}, Disk{tri.vertices[1], radius}, Disk{tri.vertices[2], radius}};
}

} // namespace detail

inline CaseValidity case_validity(const TriangleGeom& tri, double radius)
{
    detail::require_hole_inputs(tri, radius);
    CaseValidity v;
    v.sectors_contained = true;
    for (int i = 0; i < 3; ++i) {
        const bool fits = radius <= tri.altitude(i) && radius <= tri.side((i + 1) % 3) &&
                          radius <= tri.side((i + 2) % 3);
        v.sectors_contained = v.sectors_contained && fits;
    }
    v.half_lenses_contained = true;
    for (int side = 0; side < 3; ++side) {
        const double d = tri.side(side);
        if (pair_relation(d, radius) != PairRelation::Overlapping) {
            continue;
        }
        const double extent = detail::half_lens_angular_extent(d, radius);
        const double narrowest = std::min(tri.angle((side + 1) % 3), tri.angle((side + 2) % 3));
        v.half_lenses_contained = v.half_lenses_contained && extent <= narrowest;
    }
    v.no_triple_overlap = min_enclosing_radius(tri) >= radius;
    return v;
}

/// s_Δ minus the exact area of the triangle covered by its three vertex disks.
inline double exact_uncovered_area(const TriangleGeom& tri, double radius)
{
    detail::require_hole_inputs(tri, radius);
    const auto disks = detail::vertex_disks(tri, radius);
    const double covered = triangle_disk_union_area(tri, disks);
    return std::clamp(tri.area - covered, 0.0, tri.area);
}

/// True when the three vertex disks leave less than `epsilon` uncovered.
inline bool full_coverage(const TriangleGeom& tri, double radius, std::optional<double> epsilon = std::nullopt)
{
    return exact_uncovered_area(tri, radius) < epsilon.value_or(default_hole_epsilon(radius));
}

inline CaseLabel classify(const TriangleGeom& tri, double radius, std::optional<double> epsilon = std::nullopt)
{
    detail::require_hole_inputs(tri, radius);
    int overlapping = 0;
    int tangent = 0;
    for (int i = 0; i < 3; ++i) {
        switch (pair_relation(tri.side(i), radius)) {
        case PairRelation::Overlapping: ++overlapping; break;
        case PairRelation::Tangent: ++tangent; break;
        case PairRelation::Apart: break;
        }
    }
    if (overlapping == 0) {
        if (tangent == 3) {
            return CaseLabel::B;
        }
        auto same = [&](double x, double y) { return std::abs(x - y) <= kTangencyTolerance * std::max(x, y); };
        const int equal_pairs = int(same(tri.a, tri.b)) + int(same(tri.b, tri.c)) + int(same(tri.a, tri.c));
        if (equal_pairs == 1) {
            return CaseLabel::C;
        }
        return tangent > 0 ? CaseLabel::H : CaseLabel::A;
    }
    if (full_coverage(tri, radius, epsilon)) {
        return CaseLabel::F;
    }
    switch (overlapping) {
    case 1: return tangent > 0 ? CaseLabel::G : CaseLabel::D;
    case 2: return CaseLabel::E;
    default: return CaseLabel::I;
    }
}

/// Closed-form hole area: s_Δ − (s₁ + s₂ + s₃) + Σ ½·lens(R, R, d_k) over
/// overlapping pairs, where the vertex sectors sum to (π/2)R². Always
/// evaluated; `validity` says whether the value is exact.
inline HoleComputation case_formula_hole_area(const TriangleGeom& tri, double radius)
{
    detail::require_hole_inputs(tri, radius);
    HoleComputation out;
    out.method = HoleMethod::CaseFormula;
    out.s_delta = tri.area;
    out.validity = case_validity(tri, radius);
    for (int i = 0; i < 3; ++i) {
        out.sector_sum += sector_area(tri.angle(i), radius);
    }
    double corrections = 0.0;
    for (int side = 0; side < 3; ++side) {
        const double d = tri.side(side);
        if (pair_relation(d, radius) != PairRelation::Overlapping) {
            continue;
        }
        const double half = 0.5 * lens_area(radius, radius, d).area;
        out.lens_corrections.push_back({side, d, half});
        corrections += half;
    }
    out.s_h = std::clamp(out.s_delta - out.sector_sum + corrections, 0.0, out.s_delta);
    return out;
}

inline HoleComputation hole_area(const TriangleGeom& tri, double radius, MethodOption option = MethodOption::Auto)
{
    HoleComputation out = case_formula_hole_area(tri, radius);
    const bool valid = out.validity.all();
    if (option == MethodOption::CaseOnly && !valid) {
        fail(ErrorCode::PreconditionFailed, "case formula preconditions do not hold for this triangle");
    }
    if (option == MethodOption::ExactOnly || (option == MethodOption::Auto && !valid)) {
        out.method = HoleMethod::ExactFallback;
        out.s_h = exact_uncovered_area(tri, radius);
    }
    return out;
}

struct HoleReport {
    CellId cell;
    std::array<SensorId, 3> sites{};
    CaseLabel label = CaseLabel::A;
    HoleComputation computation;
    bool is_hole = false;

    double area() const noexcept { return computation.s_h; }
};

struct DetectOptions {
    MethodOption method = MethodOption::Auto;
    std::optional<double> epsilon;
};

/// One report per mesh cell, ordered by descending hole area then cell id.
inline std::vector<HoleReport> detect_holes(const SensorField& field, const TriMesh& mesh,
                                            const DetectOptions& options = {})
{
    const double radius = field.sensing_radius;
    const double epsilon = options.epsilon.value_or(default_hole_epsilon(radius));
    if (!std::isfinite(epsilon) || epsilon < 0.0) {
        fail(ErrorCode::InvalidInput, "hole threshold must be finite and non-negative");
    }
    std::vector<HoleReport> reports;
    reports.reserve(mesh.cells.size());
    for (const auto& cell : mesh.cells) {
        for (int k = 0; k < 3; ++k) {
            const auto* node = field.find_stationary(cell.sites[k]);
            if (node == nullptr || node->position != cell.geom.vertices[k]) {
                fail(ErrorCode::InconsistentInput,
                     "cell " + to_string(cell.id) + " references sensor " + to_string(cell.sites[k]) +
                         " which does not match the field");
            }
        }
        HoleReport report;
        report.cell = cell.id;
        report.sites = cell.sites;
        report.label = classify(cell.geom, radius, epsilon);
        report.computation = hole_area(cell.geom, radius, options.method);
        report.is_hole = report.computation.s_h > epsilon;
        reports.push_back(std::move(report));
    }
    std::stable_sort(reports.begin(), reports.end(), [](const HoleReport& l, const HoleReport& r) {
        if (l.area() != r.area()) {
            return l.area() > r.area();
        }
        return l.cell < r.cell;
    });
    return reports;
}

} // namespace holecov
