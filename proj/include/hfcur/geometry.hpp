#pragma once

#include <complex>
#include <functional>

#include "hfcur/specfun.hpp"

namespace hfcur {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct CurveGeometry {
    enum class Kind { circle, ellipse };
    Kind kind = Kind::circle;
    double a = 1.0;  // radius for circle, x semi-axis for ellipse
    double b = 1.0;  // y semi-axis for ellipse

    static CurveGeometry circle(double radius);
    static CurveGeometry ellipse(double a, double b);
    double scale() const { return a > b ? a : b; }
};

struct WaveConfig {
    double k = 1.0;
    Vec2 omega{1.0, 0.0};  // unit incidence direction

    static WaveConfig make(double k, double omega_angle_rad);
    double omega_angle() const { return std::atan2(omega.y, omega.x); }
};

enum class Region { illuminated, shadow_boundary, deep_shadow };

const char* region_name(Region r);

struct RegionLabel {
    Region region;
    double n_dot_omega;
};

struct BoundaryData {
    Vec2 point;
    Vec2 normal;   // outward unit normal
    Vec2 tangent;  // unit tangent, direction of increasing theta
    double curvature;
    double speed;  // |dx/dtheta|
};

BoundaryData boundary_point(const CurveGeometry& geom, double theta);

RegionLabel classify(const CurveGeometry& geom, const WaveConfig& wave, double theta,
                     double eps_region = 0.05);

// Z(omega, x) = -n(x) . omega
double z_function(const CurveGeometry& geom, const WaveConfig& wave, double theta);

// e^{ik x(theta) . omega}
Complex incident_trace(const CurveGeometry& geom, const WaveConfig& wave, double theta);

// Second arc-length derivative of the incident trace, closed form.
Complex tangential_second_derivative(const CurveGeometry& geom, const WaveConfig& wave,
                                     double theta);

// Second arc-length derivative of a smooth scalar function of theta by
// fourth-order central differences; h_arc is the arc-length step.
Complex arc_second_derivative(const CurveGeometry& geom,
                              const std::function<Complex(double)>& f, double theta,
                              double h_arc);

}  // namespace hfcur
