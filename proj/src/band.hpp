#pragma once

// Branch domains are "bands": open subsets of the square ]-L,L[^2 bounded
// either by two graphs v = g(u) of quadratics (curve band) or by two level
// lines of an affine form (affine band).  Both expose the same queries:
//
//   contains(p)   strict membership (the domain is open)
//   v_section(u)  the open v-interval of the band above abscissa u
//   u_support()   the u-intervals where the section is nonempty
//   distance(p)   Euclidean distance from p to the band
//
// distance() is what halo tests are built on: a point q lies in the
// eps-halo of the closure of a set exactly when distance(q) <= eps.

#include <functional>
#include <variant>

#include "geometry.hpp"

namespace pexmap {

// q(u) = c2*u^2 + c1*u + c0
struct Quadratic {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;

    double operator()(double u) const { return (c2 * u + c1) * u + c0; }
    double slope(double u) const { return 2.0 * c2 * u + c1; }
};

// Open subset of [lo, hi] where q(u) < 0, as a sorted interval list.
IntervalList quadratic_sublevel(const Quadratic& q, double lo, double hi);

IntervalList intersect(const IntervalList& a, const IntervalList& b);

class CurveBand {
public:
    CurveBand(Quadratic lo, Quadratic hi, double half_width);

    bool contains(const Point2& p) const;
    Interval v_section(double u) const;
    const IntervalList& u_support() const { return support_; }
    double distance(const Point2& p) const;

    const Quadratic& lower() const { return lo_; }
    const Quadratic& upper() const { return hi_; }

private:
    Quadratic lo_, hi_;
    double L_;
    IntervalList support_;
};

// c_lo < p*u + q*v < c_hi intersected with the open square.
class AffineBand {
public:
    AffineBand(double pu, double qv, double c_lo, double c_hi, double half_width);

    bool contains(const Point2& p) const;
    Interval v_section(double u) const;
    const IntervalList& u_support() const { return support_; }
    double distance(const Point2& p) const;

    double coeff_u() const { return p_; }
    double coeff_v() const { return q_; }
    double lo() const { return clo_; }
    double hi() const { return chi_; }

private:
    double p_, q_, clo_, chi_, L_;
    IntervalList support_;
};

class Band {
public:
    Band(CurveBand b) : impl_(std::move(b)) {}
    Band(AffineBand b) : impl_(std::move(b)) {}

    bool contains(const Point2& p) const {
        return std::visit([&](const auto& b) { return b.contains(p); }, impl_);
    }
    Interval v_section(double u) const {
        return std::visit([&](const auto& b) { return b.v_section(u); }, impl_);
    }
    const IntervalList& u_support() const {
        return std::visit([](const auto& b) -> const IntervalList& { return b.u_support(); }, impl_);
    }
    double distance(const Point2& p) const {
        return std::visit([&](const auto& b) { return b.distance(p); }, impl_);
    }

    bool is_curve() const { return std::holds_alternative<CurveBand>(impl_); }
    const CurveBand* as_curve() const { return std::get_if<CurveBand>(&impl_); }
    const AffineBand* as_affine() const { return std::get_if<AffineBand>(&impl_); }

private:
    std::variant<CurveBand, AffineBand> impl_;
};

// Distance from p to the region {(u,v) : u in support, v in section(u)},
// by sectionwise minimization over a u-grid with golden-section refinement.
double band_distance(const Point2& p, const IntervalList& support,
                     const std::function<Interval(double)>& section);

} // namespace pexmap
