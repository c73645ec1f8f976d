#include "band.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pexmap {

IntervalList quadratic_sublevel(const Quadratic& q, double lo, double hi) {
    IntervalList out;
    auto push = [&](double a, double b) {
        Interval iv = intersect({a, b}, {lo, hi});
        if (!iv.empty()) out.push_back(iv);
    };
    if (q.c2 == 0.0) {
        if (q.c1 == 0.0) {
            if (q.c0 < 0.0) push(lo, hi);
        } else if (q.c1 > 0.0) {
            push(lo, -q.c0 / q.c1);
        } else {
            push(-q.c0 / q.c1, hi);
        }
        return out;
    }
    const double disc = q.c1 * q.c1 - 4.0 * q.c2 * q.c0;
    if (disc <= 0.0) {
        // no real crossing: sign is the sign of c2 everywhere (or touches 0)
        if (q.c2 < 0.0) push(lo, hi);
        return out;
    }
    const double sd = std::sqrt(disc);
    // numerically stable root pair
    const double t = -0.5 * (q.c1 + std::copysign(sd, q.c1));
    double r1 = t / q.c2;
    double r2 = (t == 0.0) ? -q.c1 / (2.0 * q.c2) : q.c0 / t;
    if (r1 > r2) std::swap(r1, r2);
    if (q.c2 > 0.0) {
        push(r1, r2);
    } else {
        push(lo, r1);
        push(r2, hi);
    }
    return out;
}

IntervalList intersect(const IntervalList& a, const IntervalList& b) {
    IntervalList out;
    for (const auto& ia : a)
        for (const auto& ib : b) {
            Interval iv = intersect(ia, ib);
            if (!iv.empty()) out.push_back(iv);
        }
    std::sort(out.begin(), out.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

double band_distance(const Point2& p, const IntervalList& support,
                     const std::function<Interval(double)>& section) {
    auto objective = [&](double u) {
        const Interval s = section(u);
        if (s.empty()) return std::numeric_limits<double>::infinity();
        double dv = 0.0;
        if (p.y <= s.lo) dv = s.lo - p.y;
        else if (p.y >= s.hi) dv = p.y - s.hi;
        const double du = p.x - u;
        return du * du + dv * dv;
    };
    constexpr int kGrid = 48;
    constexpr double golden = 0.3819660112501051;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& iv : support) {
        double lo = iv.lo, hi = iv.hi;
        double bu = lo, bf = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= kGrid; ++i) {
            // stay strictly inside the open interval
            const double t = (i + 0.5) / (kGrid + 1.0);
            const double u = lo + (hi - lo) * t;
            const double f = objective(u);
            if (f < bf) { bf = f; bu = u; }
        }
        // include the projection of p.x as a candidate
        if (p.x > lo && p.x < hi) {
            const double f = objective(p.x);
            if (f < bf) { bf = f; bu = p.x; }
        }
        // golden-section refine around the best grid point
        const double h = (hi - lo) / (kGrid + 1.0);
        double a = std::max(lo + 1e-300, bu - h), b = std::min(hi - 1e-300, bu + h);
        double x1 = a + golden * (b - a), x2 = b - golden * (b - a);
        double f1 = objective(x1), f2 = objective(x2);
        for (int it = 0; it < 40 && b - a > 1e-13 * (1.0 + std::abs(bu)); ++it) {
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = a + golden * (b - a); f1 = objective(x1);
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = b - golden * (b - a); f2 = objective(x2);
            }
        }
        bf = std::min(bf, std::min(f1, f2));
        best = std::min(best, bf);
    }
    return std::sqrt(best);
}

CurveBand::CurveBand(Quadratic lo, Quadratic hi, double half_width)
    : lo_(lo), hi_(hi), L_(half_width) {
    // support: u in ]-L,L[ with g_lo(u) < L, g_hi(u) > -L, g_lo(u) < g_hi(u)
    Quadratic lo_below_L{lo_.c0 - L_, lo_.c1, lo_.c2};
    Quadratic hi_above_mL{-hi_.c0 - L_, -hi_.c1, -hi_.c2};
    Quadratic lo_below_hi{lo_.c0 - hi_.c0, lo_.c1 - hi_.c1, lo_.c2 - hi_.c2};
    support_ = intersect(quadratic_sublevel(lo_below_L, -L_, L_),
                         quadratic_sublevel(hi_above_mL, -L_, L_));
    support_ = intersect(support_, quadratic_sublevel(lo_below_hi, -L_, L_));
}

bool CurveBand::contains(const Point2& p) const {
    if (!(p.x > -L_ && p.x < L_ && p.y > -L_ && p.y < L_)) return false;
    return p.y > lo_(p.x) && p.y < hi_(p.x);
}

Interval CurveBand::v_section(double u) const {
    if (!(u > -L_ && u < L_)) return {0.0, 0.0};
    return {std::max(lo_(u), -L_), std::min(hi_(u), L_)};
}

double CurveBand::distance(const Point2& p) const {
    return band_distance(p, support_, [this](double u) { return v_section(u); });
}

AffineBand::AffineBand(double pu, double qv, double c_lo, double c_hi, double half_width)
    : p_(pu), q_(qv), clo_(c_lo), chi_(c_hi), L_(half_width) {
    // support: u in ]-L,L[ where the v-section is nonempty
    IntervalList all{{-L_, L_}};
    if (q_ == 0.0) {
        // band is a vertical strip {c_lo < p*u < c_hi}
        if (p_ > 0.0) support_ = intersect(IntervalList{{clo_ / p_, chi_ / p_}}, all);
        else if (p_ < 0.0) support_ = intersect(IntervalList{{chi_ / p_, clo_ / p_}}, all);
        else if (clo_ < 0.0 && chi_ > 0.0) support_ = all;
        return;
    }
    // v-section at u: ((c_lo - p u)/q, (c_hi - p u)/q) intersected with ]-L,L[
    // nonempty iff p u + q v hits ]c_lo,c_hi[ for some v in ]-L,L[:
    //   c_lo < p u + q L_sgn and p u - q L_sgn < c_hi with L_sgn = |q| L
    const double qa = std::abs(q_) * L_;
    Quadratic need_lo{clo_ - qa, -p_, 0.0};  // p u > c_lo - |q|L
    Quadratic need_hi{-chi_ - qa, p_, 0.0};  // p u < c_hi + |q|L
    support_ = intersect(quadratic_sublevel(need_lo, -L_, L_),
                         quadratic_sublevel(need_hi, -L_, L_));
}

bool AffineBand::contains(const Point2& p) const {
    if (!(p.x > -L_ && p.x < L_ && p.y > -L_ && p.y < L_)) return false;
    const double t = p_ * p.x + q_ * p.y;
    return t > clo_ && t < chi_;
}

Interval AffineBand::v_section(double u) const {
    if (!(u > -L_ && u < L_)) return {0.0, 0.0};
    if (q_ == 0.0) {
        const double t = p_ * u;
        if (t > clo_ && t < chi_) return {-L_, L_};
        return {0.0, 0.0};
    }
    double a = (clo_ - p_ * u) / q_;
    double b = (chi_ - p_ * u) / q_;
    if (a > b) std::swap(a, b);
    return {std::max(a, -L_), std::min(b, L_)};
}

double AffineBand::distance(const Point2& p) const {
    return band_distance(p, support_, [this](double u) { return v_section(u); });
}

} // namespace pexmap
