#pragma once

#include <string>

#include "hfcur/geometry.hpp"

namespace hfcur {

enum class CurrentKind {
    kirchhoff,
    bt1,
    bt2_2d,
    bt2_3d_form,
    exact,
    ansatz_mt,
    ansatz_bt1,
    ansatz_bt2,
};

CurrentKind parse_current_kind(const std::string& name);
std::string current_kind_name(CurrentKind k);

enum class ShadowMode { zero, extended };

// 2ik (n.omega) e^{ik x.omega} on the lit side; zero or the same formula in
// shadow depending on mode.
Complex kirchhoff_current(const CurveGeometry& geom, const WaveConfig& wave, double theta,
                          ShadowMode mode = ShadowMode::zero);

// (-ik(1 - n.omega) + c/2) e^{ik x.omega}
Complex bt1_current(const CurveGeometry& geom, const WaveConfig& wave, double theta);

// Second-order Bayliss-Turkel total current, direct form.
Complex bt2_current_2d(const CurveGeometry& geom, const WaveConfig& wave, double theta);

// Same quantity through the rationalized (c+ik)/(c^2+k^2) form; cross-check.
Complex bt2_current_2d_rationalized(const CurveGeometry& geom, const WaveConfig& wave,
                                    double theta);

// Total current from the 3-D-form absorbing condition, transplanted to the
// 2-D curve with d_x^2 as the arc-length second derivative.
Complex bt2_current_3d_form(const CurveGeometry& geom, const WaveConfig& wave,
                            double theta);

}  // namespace hfcur
