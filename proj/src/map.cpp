#include "map.hpp"

#include <algorithm>
#include <cmath>

namespace pexmap {

PiecewiseMap::PiecewiseMap(Config cfg) : cfg_(std::move(cfg)) {
    if (cfg_.half_width <= 0.0)
        raise(ErrorCode::invalid_argument, "half_width must be positive");
    if (!(cfg_.alpha > 0.0 && cfg_.alpha <= 1.0))
        raise(ErrorCode::invalid_argument, "alpha must lie in (0,1]");
    if (cfg_.Y < 1) raise(ErrorCode::invalid_argument, "Y must be >= 1");
    if (cfg_.branches.empty())
        raise(ErrorCode::invalid_argument, "map needs at least one branch");
    for (const auto& b : cfg_.branches)
        if (b.eps1 <= 0.0)
            raise(ErrorCode::invalid_argument, "branch halo radius must be positive");

    // id -> index table when ids form a compact range
    int lo = cfg_.branches.front().id, hi = lo;
    for (const auto& b : cfg_.branches) {
        lo = std::min(lo, b.id);
        hi = std::max(hi, b.id);
    }
    const std::size_t span = static_cast<std::size_t>(hi - lo) + 1;
    if (span <= 4 * cfg_.branches.size() + 16) {
        id_lookup_.assign(span, SIZE_MAX);
        for (std::size_t i = 0; i < cfg_.branches.size(); ++i)
            id_lookup_[static_cast<std::size_t>(cfg_.branches[i].id - lo)] = i;
        id_offset_ = lo;
        compact_ids_ = true;
    }
}

std::optional<std::size_t> PiecewiseMap::index_of_id(int id) const {
    if (compact_ids_) {
        const long off = static_cast<long>(id) - id_offset_;
        if (off < 0 || off >= static_cast<long>(id_lookup_.size())) return std::nullopt;
        const std::size_t i = id_lookup_[static_cast<std::size_t>(off)];
        if (i == SIZE_MAX) return std::nullopt;
        return i;
    }
    for (std::size_t i = 0; i < cfg_.branches.size(); ++i)
        if (cfg_.branches[i].id == id) return i;
    return std::nullopt;
}

std::optional<std::size_t> PiecewiseMap::branch_of(const Point2& p) const {
    const double L = cfg_.half_width;
    if (!(std::abs(p.x) <= L && std::abs(p.y) <= L))
        raise(ErrorCode::domain, "point outside the square [-L,L]^2");
    if (cfg_.locator) {
        const int id = cfg_.locator(p);
        if (auto idx = index_of_id(id); idx && cfg_.branches[*idx].band.contains(p))
            return idx;
        return std::nullopt;  // locator is exact for built-ins: miss => null set
    }
    for (std::size_t i = 0; i < cfg_.branches.size(); ++i)
        if (cfg_.branches[i].band.contains(p)) return i;
    return std::nullopt;
}

double PiecewiseMap::phi(const Point2& p) const {
    const auto idx = branch_of(p);
    if (!idx)
        raise(ErrorCode::null_set, "phi undefined on the branch-boundary null set");
    return cfg_.branches[*idx].phi(p);
}

std::array<double, 2> PiecewiseMap::gradient(std::size_t branch_index, const Point2& p) const {
    const Branch& b = cfg_.branches.at(branch_index);
    if (b.grad) return b.grad(p);
    const double h = 1e-6 * cfg_.half_width;
    const double du = (b.phi({p.x + h, p.y}) - b.phi({p.x - h, p.y})) / (2.0 * h);
    const double dv = (b.phi({p.x, p.y + h}) - b.phi({p.x, p.y - h})) / (2.0 * h);
    if (!std::isfinite(du) || !std::isfinite(dv))
        raise(ErrorCode::numeric, "gradient evaluation failed");
    return {du, dv};
}

Point2 PiecewiseMap::sample_branch_point(std::size_t branch_index, Rng& rng) const {
    const Branch& b = cfg_.branches.at(branch_index);
    const IntervalList& sup = b.band.u_support();
    const double total = total_length(sup);
    if (sup.empty() || total <= 0.0)
        raise(ErrorCode::degenerate, "branch has empty interior");
    for (int attempt = 0; attempt < 256; ++attempt) {
        double t = rng.unit() * total;
        double u = sup.back().hi;
        for (const auto& iv : sup) {
            if (t <= iv.length()) { u = iv.lo + t; break; }
            t -= iv.length();
        }
        const Interval s = b.band.v_section(u);
        if (s.empty()) continue;
        const double v = rng.uniform(s.lo, s.hi);
        const Point2 p{u, v};
        if (b.band.contains(p)) return p;
    }
    raise(ErrorCode::degenerate, "failed to sample a branch point");
}

Point2 PiecewiseMap::sample_halo_point(std::size_t branch_index, Rng& rng) const {
    const Branch& b = cfg_.branches.at(branch_index);
    const Point2 q = sample_branch_point(branch_index, rng);
    // uniform offset in the closed eps1-disc
    const double r = b.eps1 * std::sqrt(rng.unit());
    const double th = 2.0 * 3.14159265358979323846 * rng.unit();
    return {q.x + r * std::cos(th), q.y + r * std::sin(th)};
}

} // namespace pexmap
