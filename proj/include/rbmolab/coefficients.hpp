#pragma once

#include <vector>

#include "rbmolab/geometry.hpp"
#include "rbmolab/measure.hpp"

namespace rbmolab {

/// K(Q,R) = 1 + sum_{j=1}^{N} mu(2^j Q) / l(2^j Q)^n with the dyadic term
/// list kept for inspection. N is the minimal k >= 0 with l(2^k Q) >= l(R).
struct KResult {
    double value = 1.0;
    int n_steps = 0;
    std::vector<double> terms;
};

/// Requires Q subset of R.
KResult k_coefficient(const AtomicMeasure& mu, const Cube& q, const Cube& r);

/// Logarithmic upper estimate max(C,1) * (1 + log2(l(R)/l(Q))). C defaults to
/// the measure's attached growth constant. The clamp at 1 keeps the estimate
/// above K(Q,R) when the scanned constant falls below 1 on a discrete grid.
double k_log_bound(const AtomicMeasure& mu, const Cube& q, const Cube& r,
                   double growth_constant);
double k_log_bound(const AtomicMeasure& mu, const Cube& q, const Cube& r);

/// K(Q) = K(Q, 2^k Q) for the minimal k >= 1 with mu(2^k Q) > total_mass/2.
KResult k_of_cube(const AtomicMeasure& mu, const Cube& q);

}  // namespace rbmolab
