#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rbmolab/errors.hpp"

namespace rbmolab {

class AtomicMeasure;

/// Distance in the max norm, |x| = max_j |x_j|.
double linf_dist(std::span<const double> a, std::span<const double> b);
double linf_norm(std::span<const double> a);

/// Closed axis-parallel cube: center plus half side. Side length is
/// 2 * half_side.
struct Cube {
    std::vector<double> center;
    double half_side = 0.0;

    Cube() = default;
    Cube(std::vector<double> c, double h);

    int dim() const { return static_cast<int>(center.size()); }
    double side() const { return 2.0 * half_side; }

    /// Membership as a closed set (boundary included).
    bool contains_point(std::span<const double> p) const;

    bool operator==(const Cube& o) const {
        return half_side == o.half_side && center == o.center;
    }
};

/// Concentric dilation alpha*Q, alpha >= 1.
Cube dilate(const Cube& q, double alpha);

/// Q subset of R as closed sets (coordinatewise interval containment).
bool contains(const Cube& r, const Cube& q);

/// Finite saturated stand-in for "all cubes": centers anchored at atoms,
/// side lengths on the geometric ladder {ladder_base * 2^k}.
struct CubeFamily {
    std::vector<Cube> cubes;
    double ladder_base = 0.0;
    int ladder_levels = 0;
    std::string anchor_policy;  // "atoms", "atoms+midpoints", or "custom"

    std::size_t size() const { return cubes.size(); }
    bool empty() const { return cubes.empty(); }

    /// Wrap an explicit cube list (e.g. a scan family such as all triadic
    /// cubes); no anchoring invariants are claimed.
    static CubeFamily from_cubes(std::vector<Cube> cubes);

    /// FNV-1a hash of the cube list, hex encoded. Used to tag witnesses.
    std::string id() const;
};

/// One cube per (anchor, ladder level), deduplicated, anchored at the atoms
/// of mu ("atoms" policy) or additionally at midpoints of lexicographically
/// consecutive atoms ("atoms+midpoints"). The top ladder level must admit a
/// cube covering the support's bounding box.
CubeFamily build_family(const AtomicMeasure& mu, double ladder_base, int levels,
                        const std::string& anchor_policy = "atoms");

/// mu(alpha*Q) < beta * mu(Q). Requires alpha > 1 and beta > alpha^n for the
/// measure's growth dimension n; zero-mass cubes are never doubling.
bool is_doubling(const AtomicMeasure& mu, const Cube& q, double alpha, double beta);

/// Order-preserving filter of is_doubling.
CubeFamily doubling_subfamily(const AtomicMeasure& mu, const CubeFamily& family,
                              double alpha, double beta);

}  // namespace rbmolab
