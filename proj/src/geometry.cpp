#include "hfcur/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace hfcur {

CurveGeometry CurveGeometry::circle(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("circle radius must be positive");
    return {Kind::circle, radius, radius};
}

CurveGeometry CurveGeometry::ellipse(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("ellipse semi-axes must be positive");
    }
    return {Kind::ellipse, a, b};
}

WaveConfig WaveConfig::make(double k, double omega_angle_rad) {
    if (!(k > 0.0)) throw std::invalid_argument("wavenumber must be positive");
    return {k, Vec2{std::cos(omega_angle_rad), std::sin(omega_angle_rad)}};
}

const char* region_name(Region r) {
    switch (r) {
        case Region::illuminated: return "illuminated";
        case Region::shadow_boundary: return "shadow_boundary";
        case Region::deep_shadow: return "deep_shadow";
    }
    return "?";
}

namespace {

double speed_of(const CurveGeometry& g, double theta) {
    double s = std::sin(theta), c = std::cos(theta);
    return std::sqrt(g.a * g.a * s * s + g.b * g.b * c * c);
}

double speed_deriv(const CurveGeometry& g, double theta) {
    double s = std::sin(theta), c = std::cos(theta);
    return (g.a * g.a - g.b * g.b) * s * c / speed_of(g, theta);
}

}  // namespace

BoundaryData boundary_point(const CurveGeometry& geom, double theta) {
    double s = std::sin(theta), c = std::cos(theta);
    double a = geom.a, b = geom.b;
    double g = speed_of(geom, theta);
    BoundaryData d;
    d.point = {a * c, b * s};
    d.tangent = {-a * s / g, b * c / g};
    d.normal = {b * c / g, a * s / g};
    d.curvature = a * b / (g * g * g);
    d.speed = g;
    return d;
}

RegionLabel classify(const CurveGeometry& geom, const WaveConfig& wave, double theta,
                     double eps_region) {
    if (!(eps_region > 0.0 && eps_region < 0.5)) {
        throw std::invalid_argument("eps_region must lie in (0, 0.5)");
    }
    double nw = dot(boundary_point(geom, theta).normal, wave.omega);
    Region r = Region::shadow_boundary;
    if (nw < -eps_region) r = Region::illuminated;
    if (nw > eps_region) r = Region::deep_shadow;
    return {r, nw};
}

double z_function(const CurveGeometry& geom, const WaveConfig& wave, double theta) {
    return -dot(boundary_point(geom, theta).normal, wave.omega);
}

Complex incident_trace(const CurveGeometry& geom, const WaveConfig& wave, double theta) {
    double phase = wave.k * dot(boundary_point(geom, theta).point, wave.omega);
    return {std::cos(phase), std::sin(phase)};
}

Complex tangential_second_derivative(const CurveGeometry& geom, const WaveConfig& wave,
                                     double theta) {
    BoundaryData d = boundary_point(geom, theta);
    double tw = dot(d.tangent, wave.omega);
    double nw = dot(d.normal, wave.omega);
    double k = wave.k;
    // d/ds e^{ikx.w} = ik (t.w) e;  dt/ds = -curvature * n  (outward normal)
    Complex amp(-k * k * tw * tw, -k * d.curvature * nw);
    return amp * incident_trace(geom, wave, theta);
}

Complex arc_second_derivative(const CurveGeometry& geom,
                              const std::function<Complex(double)>& f, double theta,
                              double h_arc) {
    if (!(h_arc > 0.0)) throw std::invalid_argument("h_arc must be positive");
    double g = speed_of(geom, theta);
    double h = h_arc / g;
    Complex fm2 = f(theta - 2 * h), fm1 = f(theta - h), f0 = f(theta);
    Complex fp1 = f(theta + h), fp2 = f(theta + 2 * h);
    Complex d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    Complex d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    double gp = speed_deriv(geom, theta);
    return d2 / (g * g) - d1 * gp / (g * g * g);
}

}  // namespace hfcur
