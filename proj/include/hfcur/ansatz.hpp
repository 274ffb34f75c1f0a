#pragma once

#include <functional>
#include <vector>

#include "hfcur/currents.hpp"
#include "hfcur/fock.hpp"
#include "hfcur/geometry.hpp"

namespace hfcur {

// Leading coefficient conventions.  With Z = -n.omega, all three are smooth
// multiples of the same profile away from the shadow boundary:
//   kirchhoff   : a00 = 1         (constant; the Remark-1 coefficient with
//                                  the sign fixed so the lit limit is +1)
//   unit_over_z : a00 = 1/Z
//   calibrated  : a00 = 1/(2Z)    (pins the BT1 target in the lit limit)
enum class LeadingCoeff { kirchhoff, unit_over_z, calibrated };

LeadingCoeff parse_leading_coeff(const std::string& name);
std::string leading_coeff_name(LeadingCoeff c);

struct ExpansionConfig {
    int P = 0;
    int L = 0;
    LeadingCoeff convention = LeadingCoeff::calibrated;
    Complex calibration{1.0, 0.0};
    double tau_switch = 8.0;

    void validate() const;  // throws std::invalid_argument
};

using CoeffFn = std::function<Complex(const CurveGeometry&, const WaveConfig&, double)>;

// One (p, l) term of the expansion.  b is never stored: it is always
// -a/(ik), so the coupling b(ik) + a = 0 holds constructively.
struct ExpansionTerm {
    int p = 0;
    int l = 0;
    CoeffFn a;

    Complex b(const CurveGeometry& geom, const WaveConfig& wave, double theta) const;
};

ExpansionTerm leading_term(LeadingCoeff convention);

Complex a00_value(LeadingCoeff convention, const CurveGeometry& geom,
                  const WaveConfig& wave, double theta);

// k^{2/3} a00 Psi(k^{1/3} Z) e^{ik x.omega}, constant-coefficient convention.
Complex mt_leading_amplitude(const CurveGeometry& geom, const WaveConfig& wave,
                             double theta);

// k^{2/3} ((1 - n.omega) a00 + C b00) Psi(k^{1/3} Z) e^{ik x.omega}, C = c/2.
Complex bt1_leading_amplitude(const CurveGeometry& geom, const WaveConfig& wave,
                              double theta, const ExpansionConfig& cfg);

// bt1 leading plus the second-order correction term at p = l = 0.
Complex bt2_leading_amplitude(const CurveGeometry& geom, const WaveConfig& wave,
                              double theta, const ExpansionConfig& cfg);

struct FitResult {
    double constant = 0.0;  // exp(intercept)
    double rate = 0.0;      // slope of log value vs log k
    double r_squared = 0.0;
    std::vector<double> k;
    std::vector<double> value;
};

// Log-log least squares; throws std::underflow_error when a value has
// underflowed to (near) zero, std::invalid_argument on fewer than 2 points.
FitResult fit_loglog(const std::vector<double>& k, const std::vector<double>& value);

struct RegionMaxima {
    double illuminated = 0.0;
    double shadow_boundary = 0.0;
    double deep_shadow = 0.0;
};

struct Prop1Result {
    FitResult fit;                      // relative deep-illuminated gap vs k
    std::vector<RegionMaxima> abs_gap;  // per k, absolute |eta - target| maxima
    std::vector<double> rel_gap;        // per k, max gap / max |target|, Z >= z_min
};

// Gap between bt1_leading_amplitude and the BT1 current over the deep
// illuminated part Z >= z_min.  Requires >= 4 wavenumbers, each >= 50,
// strictly increasing.
Prop1Result estimate_prop1(const CurveGeometry& geom, const std::vector<WaveConfig>& waves,
                           int n_samples, const ExpansionConfig& cfg, double z_min = 0.5);

struct Prop2Result {
    FitResult fit;                 // band sup / k^{2/3} vs k
    std::vector<double> band_sup;  // per k
};

// Sup over the Fock band |k^{1/3} Z| <= band_width of |amplitude|/k^{2/3}.
// Uses the constant-coefficient convention (the 1/Z conventions diverge on
// the band); with use_exact the Mie current replaces the ansatz (circle only).
Prop2Result estimate_prop2(const CurveGeometry& geom, const std::vector<WaveConfig>& waves,
                           double band_width, int n_samples, bool use_exact = false);

}  // namespace hfcur
