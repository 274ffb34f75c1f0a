#pragma once

#include <vector>

#include "hfcur/geometry.hpp"

namespace hfcur {

struct MieSolution {
    double radius = 1.0;
    double k = 1.0;
    int n_terms = 0;                    // highest retained mode
    std::vector<Complex> coefficients;  // 1/H^{(1)}_n(k*radius), n = 0..n_terms
};

// Sound-soft circle, plane-wave incidence.  Throws std::domain_error when
// k*radius exceeds the desk-scale cap 2000.
MieSolution mie_build(double radius, double k);

// d_n w^t on the boundary at parameter theta.
Complex exact_current(const MieSolution& sol, double theta, const WaveConfig& wave);

// Total field w^i + w^s at radius r >= sol.radius (validation helper).
Complex total_field(const MieSolution& sol, double r, double theta,
                    const WaveConfig& wave);

}  // namespace hfcur
