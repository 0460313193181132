#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "holecov/error.hpp"
#include "holecov/geometry.hpp"
#include "holecov/random.hpp"
#include "holecov/sensor_field.hpp"

// Brute-force references for the closed-form results. Nothing here calls
// into hole_analysis or the exact area routines.

namespace holecov {

/// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

struct CoverageEstimate {
    double covered_fraction = 0.0;
    double uncovered_area = 0.0;
    std::uint64_t samples = 0;
    double half_width = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const CoverageEstimate&, const CoverageEstimate&) = default;
};

namespace detail {

inline bool covered_by_any(std::span<const Disk> disks, Point p) noexcept
{
    for (const Disk& disk : disks) {
        if (norm2(p - disk.center) <= disk.radius * disk.radius) {
            return true;
        }
    }
    return false;
}

inline double binomial_half_width(double fraction, std::uint64_t samples) noexcept
{
    return kZ99 * std::sqrt(std::max(fraction * (1.0 - fraction), 0.0) / static_cast<double>(samples));
}

} // namespace detail

/// Monte-Carlo covered fraction of the field rectangle. A point is covered
/// when it is within R of a stationary sensor or within R_m of a mobile one.
inline CoverageEstimate mc_coverage_fraction(const SensorField& field, std::uint64_t samples, std::uint64_t seed)
{
    if (!(field.width > 0.0) || !(field.height > 0.0)) {
        fail(ErrorCode::InvalidInput, "field must have positive area");
    }
    if (samples == 0) {
        fail(ErrorCode::InvalidInput, "at least one sample is required");
    }
    const auto disks = field.disks();
    SeededStream stream(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < samples; ++k) {
        const double x = stream.uniform(0.0, field.width);
        const double y = stream.uniform(0.0, field.height);
        hits += detail::covered_by_any(disks, {x, y}) ? 1 : 0;
    }
    CoverageEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.covered_fraction = static_cast<double>(hits) / static_cast<double>(samples);
    est.uncovered_area = (1.0 - est.covered_fraction) * field.width * field.height;
    est.half_width = detail::binomial_half_width(est.covered_fraction, samples);
    return est;
}

/// Cell-centre rasterisation of the uncovered part of a triangle over its
/// bounding box at resolution × resolution cells.
inline double grid_region_uncovered(const TriangleGeom& tri, std::span<const Disk> disks, int resolution)
{
    if (resolution < 16) {
        fail(ErrorCode::InvalidInput, "grid resolution must be at least 16");
    }
    if (tri.degenerate) {
        return 0.0;
    }
    const auto& v = tri.vertices;
    const double sign = orient(v[0], v[1], v[2]) > 0.0 ? 1.0 : -1.0;
    const double x0 = std::min({v[0].x, v[1].x, v[2].x});
    const double x1 = std::max({v[0].x, v[1].x, v[2].x});
    const double y0 = std::min({v[0].y, v[1].y, v[2].y});
    const double y1 = std::max({v[0].y, v[1].y, v[2].y});
    const double dx = (x1 - x0) / resolution;
    const double dy = (y1 - y0) / resolution;
    std::uint64_t count = 0;
    for (int j = 0; j < resolution; ++j) {
        const double y = y0 + (j + 0.5) * dy;
        // x-extent of the triangle on this row, padded by a cell so the
        // exact inside test below still decides every boundary cell
        double lo = x1;
        double hi = x0;
        for (int k = 0; k < 3; ++k) {
            const Point p = v[k];
            const Point q = v[(k + 1) % 3];
            if (std::min(p.y, q.y) <= y && y <= std::max(p.y, q.y)) {
                const double x = p.y == q.y ? p.x : p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y);
                lo = std::min({lo, x, p.y == q.y ? q.x : x});
                hi = std::max({hi, x, p.y == q.y ? q.x : x});
            }
        }
        if (lo > hi) {
            continue;
        }
        const int first = std::max(0, static_cast<int>(std::floor((lo - x0) / dx)) - 1);
        const int last = std::min(resolution - 1, static_cast<int>(std::floor((hi - x0) / dx)) + 1);
        for (int i = first; i <= last; ++i) {
            const Point p{x0 + (i + 0.5) * dx, y};
            const bool inside = sign * orient(v[0], v[1], p) >= 0.0 && sign * orient(v[1], v[2], p) >= 0.0 &&
                                sign * orient(v[2], v[0], p) >= 0.0;
            if (inside && !detail::covered_by_any(disks, p)) {
                ++count;
            }
        }
    }
    return static_cast<double>(count) * dx * dy;
}

/// Monte-Carlo estimate of the uncovered area inside a triangle, sampling
/// its bounding box. `half_width` is the 99% half-width in area units.
inline CoverageEstimate mc_triangle_uncovered(const TriangleGeom& tri, std::span<const Disk> disks,
                                              std::uint64_t samples, std::uint64_t seed)
{
    if (samples == 0) {
        fail(ErrorCode::InvalidInput, "at least one sample is required");
    }
    CoverageEstimate est;
    est.samples = samples;
    est.seed = seed;
    if (tri.degenerate) {
        est.covered_fraction = 1.0;
        return est;
    }
    const auto& v = tri.vertices;
    const double sign = orient(v[0], v[1], v[2]) > 0.0 ? 1.0 : -1.0;
    const double x0 = std::min({v[0].x, v[1].x, v[2].x});
    const double x1 = std::max({v[0].x, v[1].x, v[2].x});
    const double y0 = std::min({v[0].y, v[1].y, v[2].y});
    const double y1 = std::max({v[0].y, v[1].y, v[2].y});
    const double box = (x1 - x0) * (y1 - y0);
    SeededStream stream(seed);
    std::uint64_t uncovered = 0;
    std::uint64_t inside_count = 0;
    for (std::uint64_t k = 0; k < samples; ++k) {
        const Point p{stream.uniform(x0, x1), stream.uniform(y0, y1)};
        const bool inside = sign * orient(v[0], v[1], p) >= 0.0 && sign * orient(v[1], v[2], p) >= 0.0 &&
                            sign * orient(v[2], v[0], p) >= 0.0;
        if (inside) {
            ++inside_count;
            if (!detail::covered_by_any(disks, p)) {
                ++uncovered;
            }
        }
    }
    const double frac = static_cast<double>(uncovered) / static_cast<double>(samples);
    est.uncovered_area = frac * box;
    est.half_width = detail::binomial_half_width(frac, samples) * box;
    est.covered_fraction =
        inside_count == 0 ? 1.0 : 1.0 - static_cast<double>(uncovered) / static_cast<double>(inside_count);
    return est;
}

} // namespace holecov
