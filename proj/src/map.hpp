#pragma once

// Piecewise-defined maps phi on the square [-L,L]^2.  A map is a list of
// branches, each an open band domain O_k together with a branch function
// phi_k that extends to the eps1-halo of the closure of O_k.  The branch
// domains are pairwise disjoint and cover the square up to a null set N;
// points of N belong to no branch and the map is undefined there.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "band.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "rng.hpp"

namespace pexmap {

struct Branch {
    int id = 0;
    Band band;
    std::function<double(const Point2&)> phi;
    // analytic (d/du, d/dv); empty -> central finite differences
    std::function<std::array<double, 2>(const Point2&)> grad;
    // closed-form solver for phi_k(x, v) = w; empty -> monotone bisection
    std::function<std::optional<double>(double v, double w)> solve_x;
    double eps1 = 0.0;
};

class PiecewiseMap {
public:
    struct Config {
        double half_width = 1.0;
        double alpha = 1.0;
        int Y = 1;
        std::vector<Branch> branches;
        // declared derivative bounds (exact infimum/supremum over the halos)
        std::optional<double> declared_A;
        std::optional<double> declared_M;
        // O(1) branch hint; candidates are verified against the band predicate
        std::function<int(const Point2&)> locator;
        std::string name = "custom";
    };

    explicit PiecewiseMap(Config cfg);

    double half_width() const { return cfg_.half_width; }
    double alpha() const { return cfg_.alpha; }
    int Y() const { return cfg_.Y; }
    const std::string& name() const { return cfg_.name; }
    std::size_t branch_count() const { return cfg_.branches.size(); }
    const Branch& branch(std::size_t i) const { return cfg_.branches[i]; }
    const std::vector<Branch>& branches() const { return cfg_.branches; }
    std::optional<double> declared_A() const { return cfg_.declared_A; }
    std::optional<double> declared_M() const { return cfg_.declared_M; }

    // Index (into branches()) of the unique branch containing p, or nullopt
    // when p lies on the null set N.  Throws when p is outside the square.
    std::optional<std::size_t> branch_of(const Point2& p) const;

    // phi(p) via the containing branch; null-set points are an error.
    double phi(const Point2& p) const;

    // Gradient of the branch function, analytic or finite-difference.
    std::array<double, 2> gradient(std::size_t branch_index, const Point2& p) const;

    // A point of O_k: u drawn from the support (length-weighted), v uniform
    // in the section.  Not area-uniform; intended for bound estimation.
    Point2 sample_branch_point(std::size_t branch_index, Rng& rng) const;

    // A point of the eps1-halo of O_k: branch point plus a disc offset.
    Point2 sample_halo_point(std::size_t branch_index, Rng& rng) const;

    // Branch index by id (ids need not equal positions).
    std::optional<std::size_t> index_of_id(int id) const;

private:
    Config cfg_;
    std::vector<std::size_t> id_lookup_;  // offset table when ids are compact
    int id_offset_ = 0;
    bool compact_ids_ = false;
};

using MapPtr = std::shared_ptr<const PiecewiseMap>;

} // namespace pexmap
