#include "hfcur/currents.hpp"

#include <stdexcept>

namespace hfcur {

CurrentKind parse_current_kind(const std::string& name) {
    if (name == "kirchhoff") return CurrentKind::kirchhoff;
    if (name == "bt1") return CurrentKind::bt1;
    if (name == "bt2_2d") return CurrentKind::bt2_2d;
    if (name == "bt2_3d_form") return CurrentKind::bt2_3d_form;
    if (name == "exact") return CurrentKind::exact;
    if (name == "ansatz_mt") return CurrentKind::ansatz_mt;
    if (name == "ansatz_bt1") return CurrentKind::ansatz_bt1;
    if (name == "ansatz_bt2") return CurrentKind::ansatz_bt2;
    throw std::invalid_argument("unknown current kind: " + name);
}

std::string current_kind_name(CurrentKind k) {
    switch (k) {
        case CurrentKind::kirchhoff: return "kirchhoff";
        case CurrentKind::bt1: return "bt1";
        case CurrentKind::bt2_2d: return "bt2_2d";
        case CurrentKind::bt2_3d_form: return "bt2_3d_form";
        case CurrentKind::exact: return "exact";
        case CurrentKind::ansatz_mt: return "ansatz_mt";
        case CurrentKind::ansatz_bt1: return "ansatz_bt1";
        case CurrentKind::ansatz_bt2: return "ansatz_bt2";
    }
    throw std::logic_error("unreachable current kind");
}

Complex kirchhoff_current(const CurveGeometry& geom, const WaveConfig& wave, double theta,
                          ShadowMode mode) {
    double nw = dot(boundary_point(geom, theta).normal, wave.omega);
    if (nw >= 0.0 && mode == ShadowMode::zero) return {0.0, 0.0};
    return Complex(0.0, 2.0 * wave.k * nw) * incident_trace(geom, wave, theta);
}

Complex bt1_current(const CurveGeometry& geom, const WaveConfig& wave, double theta) {
    BoundaryData d = boundary_point(geom, theta);
    double nw = dot(d.normal, wave.omega);
    Complex amp(0.5 * d.curvature, -wave.k * (1.0 - nw));
    return amp * incident_trace(geom, wave, theta);
}

Complex bt2_current_2d(const CurveGeometry& geom, const WaveConfig& wave, double theta) {
    BoundaryData d = boundary_point(geom, theta);
    double nw = dot(d.normal, wave.omega);
    double c = d.curvature, k = wave.k;
    Complex wi = incident_trace(geom, wave, theta);
    Complex d2 = tangential_second_derivative(geom, wave, theta);
    Complex cmik(c, -k);
    Complex amp = Complex(0.0, k * nw) + Complex(0.5 * c, -k) - c * c / (8.0 * cmik);
    return amp * wi - d2 / (2.0 * cmik);
}

Complex bt2_current_2d_rationalized(const CurveGeometry& geom, const WaveConfig& wave,
                                    double theta) {
    BoundaryData d = boundary_point(geom, theta);
    double nw = dot(d.normal, wave.omega);
    double c = d.curvature, k = wave.k;
    Complex wi = incident_trace(geom, wave, theta);
    Complex d2 = tangential_second_derivative(geom, wave, theta);
    Complex cpik(c, k);
    Complex corr = cpik / (2.0 * (c * c + k * k)) * (0.25 * c * c * wi + d2);
    return (Complex(0.0, k * nw) + Complex(0.5 * c, -k)) * wi - corr;
}

Complex bt2_current_3d_form(const CurveGeometry& geom, const WaveConfig& wave,
                            double theta) {
    BoundaryData d = boundary_point(geom, theta);
    double nw = dot(d.normal, wave.omega);
    double c = d.curvature, k = wave.k;
    Complex wi = incident_trace(geom, wave, theta);
    Complex d2 = tangential_second_derivative(geom, wave, theta);
    Complex corr = c * c * Complex(c, k) / (2.0 * (c * c + k * k)) * d2;
    return (Complex(0.0, k * nw) + Complex(c, -k)) * wi - corr;
}

}  // namespace hfcur
