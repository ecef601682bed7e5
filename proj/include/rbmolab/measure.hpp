#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rbmolab/geometry.hpp"

namespace rbmolab {

struct Atom {
    std::vector<double> x;
    double w = 0.0;
};

/// Finite positive measure in R^m given as a weighted point set, with a
/// declared growth dimension n (0 < n <= m). Total mass is normalized to 1
/// at construction; the original mass is kept as `scale`. Duplicate points
/// are merged by summing weights. Immutable after construction.
class AtomicMeasure {
public:
    AtomicMeasure(int ambient_dim, double growth_dim, std::vector<Atom> atoms);

    int ambient_dim() const { return m_; }
    double growth_dim() const { return n_; }
    double scale() const { return scale_; }
    double total_mass() const { return total_mass_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    /// Tight axis-parallel bounding box of the atoms: (lo, hi) per coordinate.
    const std::vector<double>& bbox_lo() const { return bbox_lo_; }
    const std::vector<double>& bbox_hi() const { return bbox_hi_; }
    /// Diameter of the support in the max norm.
    double diameter() const;
    /// Smallest max-norm distance between two distinct atoms.
    double min_gap() const;

    /// Growth constant attached by a prior scan (growth_check); consumers
    /// such as k_log_bound read it from here when not passed explicitly.
    std::optional<double> growth_constant() const { return growth_constant_; }
    void set_growth_constant(double c) { growth_constant_ = c; }

    nlohmann::ordered_json to_json() const;
    static AtomicMeasure from_json(const nlohmann::json& j);
    static AtomicMeasure load(const std::string& path);
    void save(const std::string& path) const;

    /// FNV-1a hash of the canonical JSON serialization, hex encoded.
    std::string hash() const;

private:
    int m_;
    double n_;
    double scale_ = 1.0;
    double total_mass_ = 0.0;
    std::vector<Atom> atoms_;
    std::vector<double> bbox_lo_, bbox_hi_;
    std::optional<double> growth_constant_;
};

/// Scan certificate for the growth condition mu(Q) <= C * l(Q)^n over a
/// finite cube family. DIVERGENT once some ratio exceeds `cap`.
struct GrowthCertificate {
    double constant_C = 0.0;
    bool divergent = false;
    Cube witness_cube;            // cube attaining the supremum (or the cap)
    std::size_t scanned_family_size = 0;
    double cap = 1e6;

    nlohmann::ordered_json to_json() const;
};

/// mu(Q) for a closed cube (boundary atoms included).
double mass_of_cube(const AtomicMeasure& mu, const Cube& q);

/// Maximize mu(Q)/l(Q)^n over the family.
GrowthCertificate growth_check(const AtomicMeasure& mu, const CubeFamily& family,
                               double divergence_cap = 1e6);

/// Uniform midpoint grid over an axis-parallel box; growth dimension equals
/// the box dimension, scale records the box volume.
AtomicMeasure gen_lebesgue_grid(const std::vector<std::pair<double, double>>& box,
                                int atoms_per_side);

/// Depth-level middle-Cantor measure on [0,1]: 2^depth atoms at the interval
/// centers, equal weights, growth dimension log 2 / log(1/ratio).
AtomicMeasure gen_cantor(int depth, double ratio = 1.0 / 3.0);

}  // namespace rbmolab
