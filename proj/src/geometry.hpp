#pragma once

#include <cmath>
#include <optional>
#include <vector>

namespace pexmap {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline double dist(const Point2& a, const Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Axis-aligned rectangle [xlo,xhi] x [ylo,yhi].
struct Rect {
    double xlo = 0.0, xhi = 0.0;
    double ylo = 0.0, yhi = 0.0;

    double width() const { return xhi - xlo; }
    double height() const { return yhi - ylo; }
    double area() const { return width() * height(); }

    bool contains(const Point2& p, double tol = 0.0) const {
        return p.x >= xlo - tol && p.x <= xhi + tol &&
               p.y >= ylo - tol && p.y <= yhi + tol;
    }
    bool contains_open(const Point2& p) const {
        return p.x > xlo && p.x < xhi && p.y > ylo && p.y < yhi;
    }
};

// Open interval ]lo, hi[; empty when hi <= lo.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool empty() const { return !(hi > lo); }
    double length() const { return empty() ? 0.0 : hi - lo; }
    bool contains(double t) const { return t > lo && t < hi; }
};

// Intersection of two open intervals.
inline Interval intersect(const Interval& a, const Interval& b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

// Union of disjoint intervals kept sorted; used for branch u-supports.
using IntervalList = std::vector<Interval>;

inline double total_length(const IntervalList& list) {
    double s = 0.0;
    for (const auto& iv : list) s += iv.length();
    return s;
}

} // namespace pexmap
