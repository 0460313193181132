#pragma once

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "holecov/geometry.hpp"

// Orientation and in-circle signs. A double-precision evaluation is accepted
// when its magnitude clears a forward error bound; otherwise the determinant
// is re-evaluated exactly over rationals, so the returned sign is always exact.

namespace holecov::predicates {

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
inline constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
inline constexpr double kInCircleBound = (10.0 + 96.0 * kEps) * kEps;

inline int sign_of(const Rational& v) { return v.sign(); }

inline int orient_exact(Point a, Point b, Point c)
{
    const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    return sign_of((ax - cx) * (by - cy) - (ay - cy) * (bx - cx));
}

inline int incircle_exact(Point a, Point b, Point c, Point d)
{
    const Rational dx(d.x), dy(d.y);
    const Rational adx = Rational(a.x) - dx, ady = Rational(a.y) - dy;
    const Rational bdx = Rational(b.x) - dx, bdy = Rational(b.y) - dy;
    const Rational cdx = Rational(c.x) - dx, cdy = Rational(c.y) - dy;
    const Rational alift = adx * adx + ady * ady;
    const Rational blift = bdx * bdx + bdy * bdy;
    const Rational clift = cdx * cdx + cdy * cdy;
    return sign_of(alift * (bdx * cdy - bdy * cdx) + blift * (cdx * ady - cdy * adx) +
                   clift * (adx * bdy - ady * bdx));
}

} // namespace detail

/// +1 when (a, b, c) turns counter-clockwise, −1 clockwise, 0 collinear.
inline int orient2d(Point a, Point b, Point c)
{
    const double left = (a.x - c.x) * (b.y - c.y);
    const double right = (a.y - c.y) * (b.x - c.x);
    const double det = left - right;
    const double bound = detail::kOrientBound * (std::abs(left) + std::abs(right));
    if (det > bound) {
        return 1;
    }
    if (-det > bound) {
        return -1;
    }
    return detail::orient_exact(a, b, c);
}

/// +1 when d lies strictly inside the circle through the counter-clockwise
/// triangle (a, b, c), −1 strictly outside, 0 cocircular.
inline int incircle(Point a, Point b, Point c, Point d)
{
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;
    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                             (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                             (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    const double bound = detail::kInCircleBound * permanent;
    if (det > bound) {
        return 1;
    }
    if (-det > bound) {
        return -1;
    }
    return detail::incircle_exact(a, b, c, d);
}

} // namespace holecov::predicates
