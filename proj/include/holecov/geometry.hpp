#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "holecov/error.hpp"

namespace holecov {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
};

constexpr Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator*(double k, Point p) noexcept { return {k * p.x, k * p.y}; }

constexpr double dot(Point a, Point b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) noexcept { return a.x * b.y - a.y * b.x; }
constexpr double norm2(Point p) noexcept { return dot(p, p); }
inline double norm(Point p) noexcept { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) noexcept { return norm(a - b); }

/// Twice the signed area of (a, b, c); positive when counter-clockwise.
constexpr double orient(Point a, Point b, Point c) noexcept { return cross(b - a, c - a); }

/// A sensing disk.
struct Disk {
    Point center;
    double radius = 0.0;
};

namespace detail {

/// Relative slack for rounding noise in the triangle inequality.
inline constexpr double kRadicandTolerance = 1e-12;

inline double clamped_acos(double v) noexcept { return std::acos(std::clamp(v, -1.0, 1.0)); }

inline void require_finite_nonnegative(double v, const char* what)
{
    if (!std::isfinite(v) || v < 0.0) {
        fail(ErrorCode::InvalidInput, std::string(what) + " must be finite and non-negative");
    }
}

} // namespace detail

/// Triangle with derived measurements. Side `a` is opposite vertex 0, `b`
/// opposite vertex 1, `c` opposite vertex 2; `alpha`, `beta`, `zeta` are the
/// interior angles at vertices 0, 1, 2.
struct TriangleGeom {
    std::array<Point, 3> vertices{};
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double zeta = 0.0;
    double s = 0.0;
    double area = 0.0;
    bool degenerate = true;

    double side(int i) const noexcept { return i == 0 ? a : (i == 1 ? b : c); }
    double angle(int i) const noexcept { return i == 0 ? alpha : (i == 1 ? beta : zeta); }
    double max_side() const noexcept { return std::max({a, b, c}); }

    /// Distance from vertex i to the line through the other two vertices.
    double altitude(int i) const noexcept
    {
        const double base = side(i);
        return base > 0.0 ? 2.0 * area / base : 0.0;
    }

    bool counter_clockwise() const noexcept
    {
        return orient(vertices[0], vertices[1], vertices[2]) > 0.0;
    }
};

/// Heron's formula, evaluated in Kahan's cancellation-free ordering.
/// Throws on negative sides or on triples violating the triangle inequality
/// by more than rounding noise.
inline double heron_area(double a, double b, double c)
{
    detail::require_finite_nonnegative(a, "side length");
    detail::require_finite_nonnegative(b, "side length");
    detail::require_finite_nonnegative(c, "side length");
    std::array<double, 3> sides{a, b, c};
    std::sort(sides.begin(), sides.end(), std::greater<>());
    const auto [p, q, r] = sides;
    const double gap = r - (p - q);
    if (gap < -detail::kRadicandTolerance * p) {
        fail(ErrorCode::InvalidInput, "side lengths violate the triangle inequality");
    }
    const double radicand = (p + (q + r)) * std::max(gap, 0.0) * (r + (p - q)) * (p + (q - r));
    return 0.25 * std::sqrt(std::max(radicand, 0.0));
}

/// Degeneracy threshold relative to the squared longest side.
inline constexpr double kDegenerateAreaRatio = 1e-12;

inline TriangleGeom triangle_from_vertices(Point p1, Point p2, Point p3) noexcept
{
    TriangleGeom t;
    t.vertices = {p1, p2, p3};
    t.a = distance(p2, p3);
    t.b = distance(p3, p1);
    t.c = distance(p1, p2);
    t.s = (t.a + t.b + t.c) / 2.0;
    t.area = std::abs(orient(p1, p2, p3)) / 2.0;
    const double longest = t.max_side();
    t.degenerate = !(t.area >= kDegenerateAreaRatio * longest * longest) || longest == 0.0;
    if (t.degenerate) {
        t.area = 0.0;
    }
    auto angle_at = [](Point apex, Point u, Point v) {
        const Point du = u - apex;
        const Point dv = v - apex;
        return std::atan2(std::abs(cross(du, dv)), dot(du, dv));
    };
    t.alpha = angle_at(p1, p2, p3);
    t.beta = angle_at(p2, p3, p1);
    t.zeta = angle_at(p3, p1, p2);
    return t;
}

/// Area of a circular sector with the given opening angle.
inline double sector_area(double angle, double radius)
{
    if (!std::isfinite(angle) || angle < 0.0 || angle > 2.0 * std::numbers::pi) {
        fail(ErrorCode::InvalidInput, "sector angle must lie in [0, 2*pi]");
    }
    detail::require_finite_nonnegative(radius, "radius");
    return 0.5 * angle * radius * radius;
}

namespace detail {

/// t − sin t without cancellation for small t.
inline double angle_minus_sine(double t) noexcept
{
    if (std::abs(t) < 1e-2) {
        const double t2 = t * t;
        return t * t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0 * (1.0 - t2 / 72.0)));
    }
    return t - std::sin(t);
}

/// Segment of a disk cut by a chord that subtends `half_angle` on each side
/// of the centre line: ½R²(2θ − sin 2θ), which equals R²·acos(h/R) − h·√(R² − h²)
/// for h = R·cos θ.
inline double segment_area_from_angle(double radius, double half_angle) noexcept
{
    return 0.5 * radius * radius * angle_minus_sine(2.0 * half_angle);
}

} // namespace detail

/// Area of the circular segment of a disk of radius `radius` cut off by a
/// chord at distance `height` from the centre.
inline double segment_area(double radius, double height)
{
    detail::require_finite_nonnegative(radius, "segment radius");
    detail::require_finite_nonnegative(height, "segment height");
    if (height > radius) {
        fail(ErrorCode::InvalidInput, "segment height exceeds radius");
    }
    if (radius == 0.0) {
        return 0.0;
    }
    const double half_chord = std::sqrt((radius - height) * (radius + height));
    return detail::segment_area_from_angle(radius, std::atan2(half_chord, height));
}

enum class LensRegime { Disjoint, Contained, Overlapping };

/// Intersection of two disks placed at (0,0) and (d,0). Chord fields and
/// segment heights are only meaningful in the overlapping regime and are
/// zero otherwise.
struct LensGeom {
    double R = 0.0;
    double r = 0.0;
    double d = 0.0;
    double x_chord = 0.0;
    double half_chord = 0.0;
    double chord_len = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double area = 0.0;
    LensRegime regime = LensRegime::Disjoint;
};

inline LensGeom lens_area(double R, double r, double d)
{
    detail::require_finite_nonnegative(R, "radius");
    detail::require_finite_nonnegative(r, "radius");
    detail::require_finite_nonnegative(d, "center distance");
    LensGeom lens{.R = R, .r = r, .d = d};
    if (d >= R + r) {
        lens.regime = LensRegime::Disjoint;
        return lens;
    }
    if (d <= std::abs(R - r)) {
        const double small = std::min(R, r);
        lens.regime = LensRegime::Contained;
        lens.area = std::numbers::pi * small * small;
        return lens;
    }
    lens.regime = LensRegime::Overlapping;
    lens.x_chord = (d * d - r * r + R * R) / (2.0 * d);
    // Product form of the chord; each factor is a single rounded sum, so it
    // stays accurate near tangency and near containment.
    const double product = (-d + r + R) * (d - r + R) * (d + r - R) * (d + r + R);
    lens.chord_len = std::sqrt(std::max(product, 0.0)) / d;
    lens.half_chord = lens.chord_len / 2.0;
    lens.d1 = lens.x_chord;
    lens.d2 = d - lens.x_chord;
    // A(R, d1) + A(r, d2), with each segment evaluated from its half-angle.
    lens.area = detail::segment_area_from_angle(R, std::atan2(lens.half_chord, lens.d1)) +
                detail::segment_area_from_angle(r, std::atan2(lens.half_chord, lens.d2));
    const double cap = std::numbers::pi * std::min(R, r) * std::min(R, r);
    lens.area = std::clamp(lens.area, 0.0, cap);
    return lens;
}

struct TriangleCenters {
    Point circumcenter;
    double circumradius = 0.0;
    Point incenter;
    double inradius = 0.0;
};

inline void require_non_degenerate(const TriangleGeom& tri)
{
    if (tri.degenerate) {
        fail(ErrorCode::DegenerateGeometry, "triangle is degenerate");
    }
}

/// Intersection of the perpendicular bisectors and the common distance to
/// the vertices. The point lies outside the triangle when it is obtuse.
inline std::pair<Point, double> circumcenter(const TriangleGeom& tri)
{
    require_non_degenerate(tri);
    const Point origin = tri.vertices[0];
    const Point u = tri.vertices[1] - origin;
    const Point v = tri.vertices[2] - origin;
    const double denom = 2.0 * cross(u, v);
    const double uu = norm2(u);
    const double vv = norm2(v);
    const Point offset{(v.y * uu - u.y * vv) / denom, (u.x * vv - v.x * uu) / denom};
    return {origin + offset, norm(offset)};
}

/// Side-length weighted vertex average and inradius area / s.
inline std::pair<Point, double> incenter(const TriangleGeom& tri)
{
    require_non_degenerate(tri);
    const double perimeter = tri.a + tri.b + tri.c;
    const auto& v = tri.vertices;
    const Point center{(tri.a * v[0].x + tri.b * v[1].x + tri.c * v[2].x) / perimeter,
                       (tri.a * v[0].y + tri.b * v[1].y + tri.c * v[2].y) / perimeter};
    return {center, tri.area / tri.s};
}

inline TriangleCenters triangle_centers(const TriangleGeom& tri)
{
    const auto [cc, cr] = circumcenter(tri);
    const auto [ic, ir] = incenter(tri);
    return {cc, cr, ic, ir};
}

/// Radius of the smallest circle enclosing the three vertices.
inline double min_enclosing_radius(const TriangleGeom& tri)
{
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (tri.alpha >= half_pi || tri.beta >= half_pi || tri.zeta >= half_pi) {
        return tri.max_side() / 2.0;
    }
    return circumcenter(tri).second;
}

namespace detail {

/// Signed area of disk(0, radius) ∩ triangle(0, p, q).
inline double fan_piece_area(Point p, Point q, double radius) noexcept
{
    const Point dir = q - p;
    const double aa = norm2(dir);
    if (aa == 0.0) {
        return 0.0;
    }
    const double r2 = radius * radius;
    const double bb = dot(p, dir);
    const double cc = norm2(p) - r2;
    std::array<double, 4> params{0.0, 0.0, 0.0, 1.0};
    std::size_t count = 1;
    const double disc = bb * bb - aa * cc;
    if (disc > 0.0) {
        const double root = std::sqrt(disc);
        for (double t : {(-bb - root) / aa, (-bb + root) / aa}) {
            if (t > 0.0 && t < 1.0) {
                params[count++] = t;
            }
        }
    }
    params[count++] = 1.0;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < count; ++i) {
        const Point u = p + params[i] * dir;
        const Point w = p + params[i + 1] * dir;
        const Point mid = p + (0.5 * (params[i] + params[i + 1])) * dir;
        if (norm2(mid) <= r2) {
            total += 0.5 * cross(u, w);
        } else {
            total += 0.5 * r2 * std::atan2(cross(u, w), dot(u, w));
        }
    }
    return total;
}

} // namespace detail

/// Exact area of triangle ∩ disk, summed over the signed fan of triangles
/// (center, edge start, edge end). Degenerate triangles give 0.
inline double triangle_disk_intersection_area(const TriangleGeom& tri, Point center, double radius)
{
    detail::require_finite_nonnegative(radius, "radius");
    if (tri.degenerate || radius == 0.0) {
        return 0.0;
    }
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
        total += detail::fan_piece_area(tri.vertices[i] - center, tri.vertices[(i + 1) % 3] - center, radius);
    }
    const double cap = std::min(tri.area, std::numbers::pi * radius * radius);
    return std::clamp(std::abs(total), 0.0, cap);
}

namespace detail {

/// Parameters t in (0, 1) where segment a + t(b - a) crosses the circle.
inline void segment_circle_params(Point a, Point b, const Disk& disk, std::vector<double>& out)
{
    const Point dir = b - a;
    const Point rel = a - disk.center;
    const double aa = norm2(dir);
    const double bb = dot(rel, dir);
    const double cc = norm2(rel) - disk.radius * disk.radius;
    const double disc = bb * bb - aa * cc;
    if (aa == 0.0 || disc < 0.0) {
        return;
    }
    const double root = std::sqrt(disc);
    for (double t : {(-bb - root) / aa, (-bb + root) / aa}) {
        if (t > 0.0 && t < 1.0) {
            out.push_back(t);
        }
    }
}

inline bool strictly_inside(const Disk& disk, Point p) noexcept
{
    return norm2(p - disk.center) < disk.radius * disk.radius;
}

/// Contribution of the arc θ0→θ1 (counter-clockwise) to ½∮(x dy − y dx).
inline double arc_green_term(const Disk& disk, double theta0, double theta1) noexcept
{
    const double r = disk.radius;
    return 0.5 * (r * r * (theta1 - theta0) + disk.center.x * r * (std::sin(theta1) - std::sin(theta0)) -
                  disk.center.y * r * (std::cos(theta1) - std::cos(theta0)));
}

} // namespace detail

/// Exact area of triangle ∩ (union of disks), by Green's theorem over the
/// boundary of the region: triangle-edge pieces lying inside some disk plus
/// circle arcs lying inside the triangle and outside every other disk.
inline double triangle_disk_union_area(const TriangleGeom& tri, std::span<const Disk> disks)
{
    for (const Disk& disk : disks) {
        detail::require_finite_nonnegative(disk.radius, "radius");
    }
    if (tri.degenerate || disks.empty()) {
        return 0.0;
    }
    std::array<Point, 3> v = tri.vertices;
    if (!tri.counter_clockwise()) {
        std::swap(v[1], v[2]);
    }
    auto inside_triangle = [&v](Point p) {
        return orient(v[0], v[1], p) > 0.0 && orient(v[1], v[2], p) > 0.0 && orient(v[2], v[0], p) > 0.0;
    };
    auto covered = [&disks](Point p, std::size_t skip) {
        for (std::size_t j = 0; j < disks.size(); ++j) {
            if (j != skip && detail::strictly_inside(disks[j], p)) {
                return true;
            }
        }
        return false;
    };

    double total = 0.0;
    std::vector<double> breaks;
    for (int e = 0; e < 3; ++e) {
        const Point a = v[e];
        const Point b = v[(e + 1) % 3];
        breaks.assign({0.0, 1.0});
        for (const Disk& disk : disks) {
            detail::segment_circle_params(a, b, disk, breaks);
        }
        std::sort(breaks.begin(), breaks.end());
        for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
            const double t0 = breaks[k];
            const double t1 = breaks[k + 1];
            if (t1 <= t0) {
                continue;
            }
            if (covered(a + (0.5 * (t0 + t1)) * (b - a), disks.size())) {
                total += 0.5 * cross(a + t0 * (b - a), a + t1 * (b - a));
            }
        }
    }

    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        const Disk& disk = disks[i];
        if (disk.radius == 0.0) {
            continue;
        }
        // Identical earlier disks own the shared boundary.
        bool duplicate = false;
        for (std::size_t j = 0; j < i; ++j) {
            duplicate = duplicate || (disks[j].center == disk.center && disks[j].radius == disk.radius);
        }
        if (duplicate) {
            continue;
        }
        breaks.clear();
        std::vector<double> params;
        for (int e = 0; e < 3; ++e) {
            const Point a = v[e];
            const Point b = v[(e + 1) % 3];
            params.clear();
            detail::segment_circle_params(a, b, disk, params);
            for (double t : params) {
                const Point hit = a + t * (b - a) - disk.center;
                breaks.push_back(std::atan2(hit.y, hit.x));
            }
            const Point corner = a - disk.center;
            if (std::abs(norm(corner) - disk.radius) <= 1e-9 * disk.radius) {
                breaks.push_back(std::atan2(corner.y, corner.x));
            }
        }
        for (std::size_t j = 0; j < disks.size(); ++j) {
            if (j == i) {
                continue;
            }
            const Disk& other = disks[j];
            const Point delta = other.center - disk.center;
            const double dist = norm(delta);
            if (dist == 0.0 || dist >= disk.radius + other.radius || dist <= std::abs(disk.radius - other.radius)) {
                continue;
            }
            const double base = std::atan2(delta.y, delta.x);
            const double spread = detail::clamped_acos(
                (dist * dist + disk.radius * disk.radius - other.radius * other.radius) / (2.0 * dist * disk.radius));
            breaks.push_back(base - spread);
            breaks.push_back(base + spread);
        }
        for (double& theta : breaks) {
            theta = std::remainder(theta, two_pi);
        }
        std::sort(breaks.begin(), breaks.end());
        if (breaks.empty()) {
            breaks.push_back(0.0);
        }
        breaks.push_back(breaks.front() + two_pi);
        for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
            const double t0 = breaks[k];
            const double t1 = breaks[k + 1];
            if (t1 <= t0) {
                continue;
            }
            const double mid = 0.5 * (t0 + t1);
            const Point probe = disk.center + disk.radius * Point{std::cos(mid), std::sin(mid)};
            if (inside_triangle(probe) && !covered(probe, i)) {
                total += detail::arc_green_term(disk, t0, t1);
            }
        }
    }
    return std::clamp(total, 0.0, tri.area);
}

} // namespace holecov
