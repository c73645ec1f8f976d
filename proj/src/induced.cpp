#include "induced.hpp"

#include <algorithm>
#include <cmath>

namespace pexmap {

InducedSystem::InducedSystem(MapPtr map, double A) : map_(std::move(map)), A_(A) {
    if (!map_) raise(ErrorCode::invalid_argument, "null map");
    if (!(A > 1.0))
        raise(ErrorCode::hypothesis, "expansion bound A must exceed 1");
    gamma_ = 1.0 / std::sqrt(A);
    const double L = map_->half_width();
    omega_ = Rect{-L, L, -gamma_ * L, gamma_ * L};
}

std::optional<std::pair<Point2, std::size_t>>
InducedSystem::step(double x, double v, double* w_out) const {
    const double L = map_->half_width();
    // absorb rounding when y sat exactly on the Omega edge
    double vv = v;
    if (std::abs(vv) > L && std::abs(vv) <= L + kEdgeTol / gamma_)
        vv = std::copysign(L, vv);
    const auto idx = map_->branch_of({x, vv});
    if (!idx) return std::nullopt;
    const double w = map_->branch(*idx).phi({x, vv});
    if (!std::isfinite(w) || std::abs(w) > L + kEdgeTol)
        raise(ErrorCode::numeric, "branch image left [-L,L] beyond tolerance");
    if (w_out) *w_out = w;
    return std::make_pair(Point2{vv, gamma_ * w}, *idx);
}

std::pair<Point2, std::size_t> InducedSystem::apply(const Point2& p) const {
    if (!omega_.contains(p, kEdgeTol))
        raise(ErrorCode::domain, "point outside Omega");
    const auto r = step(p.x, p.y / gamma_, nullptr);
    if (!r) raise(ErrorCode::null_set, "T undefined on the null set N'");
    return *r;
}

std::optional<Point2> InducedSystem::apply_or_null(const Point2& p) const {
    if (!omega_.contains(p, kEdgeTol)) return std::nullopt;
    const auto r = step(p.x, p.y / gamma_, nullptr);
    if (!r) return std::nullopt;
    return r->first;
}

Point2 InducedSystem::invert_branch(std::size_t branch_index, const Point2& q) const {
    const Branch& b = map_->branch(branch_index);
    const double L = map_->half_width();
    const double y = gamma_ * q.x;      // preimage ordinate
    const double v = q.x;               // uncompressed second coordinate
    const double w = q.y / gamma_;      // target phi value
    std::optional<double> x;
    if (b.solve_x) {
        x = b.solve_x(v, w);
    } else {
        // phi_k(., v) is strictly monotone; bisect over the halo-extended
        // hull of the u-support
        const IntervalList& sup = b.band.u_support();
        if (sup.empty()) raise(ErrorCode::no_preimage, "empty branch");
        double lo = sup.front().lo - b.eps1;
        double hi = sup.back().hi + b.eps1;
        lo = std::max(lo, -L - b.eps1);
        hi = std::min(hi, L + b.eps1);
        auto f = [&](double u) { return b.phi({u, v}) - w; };
        double flo = f(lo), fhi = f(hi);
        if (flo == 0.0) x = lo;
        else if (fhi == 0.0) x = hi;
        else if ((flo < 0.0) != (fhi < 0.0)) {
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) { lo = hi = mid; break; }
                if ((fm < 0.0) == (flo < 0.0)) { lo = mid; flo = fm; }
                else { hi = mid; fhi = fm; }
                if (hi - lo < 1e-15 * (1.0 + std::abs(mid))) break;
            }
            x = 0.5 * (lo + hi);
        }
    }
    if (!x) raise(ErrorCode::no_preimage, "no preimage in this branch");
    const Point2 p{*x, y};
    // preimage must lie in U_k: uncompressed point in the open band
    if (!b.band.contains({p.x, v}))
        raise(ErrorCode::no_preimage, "preimage falls outside the branch domain");
    const Point2 img = step(p.x, v, nullptr)->first;
    if (dist(img, q) > 1e-10)
        raise(ErrorCode::numeric, "branch inversion failed round-trip check");
    return p;
}

OrbitResult InducedSystem::orbit(const Point2& seed, std::size_t n,
                                 std::size_t burn_in) const {
    if (!omega_.contains(seed, kEdgeTol))
        raise(ErrorCode::domain, "seed outside Omega");
    OrbitResult out;
    out.points.reserve(n);
    double x = seed.x;
    double v = seed.y / gamma_;
    for (std::size_t t = 0; t < burn_in + n; ++t) {
        if (t >= burn_in) {
            if (out.points.size() == n) break;
            out.points.push_back({x, gamma_ * v});
        }
        if (t + 1 == burn_in + n) break;
        double w = 0.0;
        const auto r = step(x, v, &w);
        if (!r) { out.hit_null = true; return out; }
        x = r->first.x;
        v = w;  // exact: y'/gamma = (gamma*w)/gamma carried without rounding
    }
    return out;
}

InducedSystem::SeriesResult InducedSystem::x_series(double x0, double x1,
                                                    std::size_t n) const {
    const double L = map_->half_width();
    if (!(std::abs(x0) <= L && std::abs(x1) <= L))
        raise(ErrorCode::domain, "seed coordinates outside [-L,L]");
    const OrbitResult orb = orbit({x0, gamma_ * x1}, n, 0);
    SeriesResult out;
    out.hit_null = orb.hit_null;
    out.values.reserve(orb.points.size());
    for (const auto& p : orb.points) out.values.push_back(p.x);
    return out;
}

std::function<std::optional<Point2>(const Point2&)> InducedSystem::point_map() const {
    // capture a shared_ptr copy so the closure owns what it needs
    auto self = std::make_shared<InducedSystem>(*this);
    return [self](const Point2& p) { return self->apply_or_null(p); };
}

} // namespace pexmap
