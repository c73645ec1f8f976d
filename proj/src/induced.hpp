#pragma once

// The induced two-dimensional system on Omega = [-L,L] x [-gL, gL]:
//
//   T(x,y) = ( y/g , g * phi(x, y/g) ),    g = 1/sqrt(A),
//
// conjugate to the scalar recursion X_{t+2} = phi(X_t, X_{t+1}) through
// Z_t = (X_t, g X_{t+1}).  Orbits are iterated in the uncompressed state
// (x, v) with v = y/g, so the emitted x-coordinates satisfy the scalar
// recursion to round-off and no error accumulates from repeated g
// compression/decompression.

#include <functional>
#include <optional>
#include <vector>

#include "map.hpp"

namespace pexmap {

struct OrbitResult {
    std::vector<Point2> points;  // length n unless the orbit died early
    bool hit_null = false;       // an iterate landed on the null set N'
};

class InducedSystem {
public:
    // A is the certified expansion bound; gamma = 1/sqrt(A).
    InducedSystem(MapPtr map, double A);

    const PiecewiseMap& map() const { return *map_; }
    MapPtr map_ptr() const { return map_; }
    double gamma() const { return gamma_; }
    double expansion_bound() const { return A_; }
    const Rect& omega() const { return omega_; }

    // Absolute tolerance used to absorb rounding at branch/Omega edges.
    static constexpr double kEdgeTol = 1e-12;

    // One application of T.  Returns the image and the branch index used.
    // Throws null_set when the uncompressed point lies on N, domain when
    // outside Omega.
    std::pair<Point2, std::size_t> apply(const Point2& p) const;

    // As apply(), but nullopt on the null set (no exception); used by the
    // Ulam assembler where dead mass is dropped and counted.
    std::optional<Point2> apply_or_null(const Point2& p) const;

    // Preimage of q under branch k.  Uses the branch's closed-form solver
    // when present, otherwise a monotone bisection in x (|dphi/du| >= A > 0
    // makes phi strictly monotone in x).  Round-trip is verified to 1e-10.
    Point2 invert_branch(std::size_t branch_index, const Point2& q) const;

    // n points after discarding burn_in iterates, starting from seed in
    // Omega.  Terminates early (hit_null) when an iterate lands on N'.
    OrbitResult orbit(const Point2& seed, std::size_t n, std::size_t burn_in) const;

    // X_0..X_{n-1} of the scalar recursion, as the first coordinates of the
    // orbit of (x0, g*x1); bit-identical to reading orbit() output.
    struct SeriesResult {
        std::vector<double> values;
        bool hit_null = false;
    };
    SeriesResult x_series(double x0, double x1, std::size_t n) const;

    // Point map for operators: defined-or-null semantics of apply_or_null.
    std::function<std::optional<Point2>(const Point2&)> point_map() const;

private:
    // internal step in uncompressed state (x, v); nullopt on N
    std::optional<std::pair<Point2, std::size_t>> step(double x, double v,
                                                       double* w_out) const;

    MapPtr map_;
    double A_ = 0.0;
    double gamma_ = 0.0;
    Rect omega_;
};

} // namespace pexmap
