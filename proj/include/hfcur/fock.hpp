#pragma once

#include "hfcur/specfun.hpp"

namespace hfcur {

enum class FockPath { quadrature, asymptotic };

struct FockEval {
    double tau = 0.0;
    int l = 0;
    Complex value{0.0, 0.0};
    FockPath path = FockPath::quadrature;
    double err_estimate = 0.0;
};

// Psi^{(l)}(tau) = d^l/dtau^l [ gamma e^{-i tau^3/3} int e^{-is tau}/A_+(s) ds ],
// l = 0..2, tau in [-20, 50].  Quadrature path below tau_switch, truncated
// asymptotic series (-2i tau + c1 tau^-2 + c2 tau^-5 differentiated termwise)
// at and above it.  gamma, c1, c2 come from a one-time self-calibration
// against the quadrature on tau in [6, 12] with the leading coefficient
// pinned to -2i.
FockEval psi(double tau, int l = 0, double tau_switch = 8.0);

// The two evaluation paths, exposed for overlap/consistency testing.
// s_scale stretches the base contour extents (contour-independence checks).
FockEval psi_quadrature(double tau, int l, double s_scale = 1.0);
FockEval psi_asymptotic(double tau, int l);

struct FockCalibration {
    Complex gamma;  // global normalization, |gamma| = 1/(2 pi)
    Complex c1;     // tau^-2 coefficient, ~0.5
    Complex c2;     // tau^-5 coefficient
};

const FockCalibration& fock_calibration();

}  // namespace hfcur
