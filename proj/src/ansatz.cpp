#include "hfcur/ansatz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hfcur/reference.hpp"

namespace hfcur {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex psi0(double tau, const ExpansionConfig& cfg) {
    return psi(tau, 0, cfg.tau_switch).value;
}

}  // namespace

LeadingCoeff parse_leading_coeff(const std::string& name) {
    if (name == "kirchhoff") return LeadingCoeff::kirchhoff;
    if (name == "unit_over_z") return LeadingCoeff::unit_over_z;
    if (name == "calibrated") return LeadingCoeff::calibrated;
    throw std::invalid_argument("unknown leading coefficient convention: " + name);
}

std::string leading_coeff_name(LeadingCoeff c) {
    switch (c) {
        case LeadingCoeff::kirchhoff: return "kirchhoff";
        case LeadingCoeff::unit_over_z: return "unit_over_z";
        case LeadingCoeff::calibrated: return "calibrated";
    }
    throw std::logic_error("unreachable convention");
}

void ExpansionConfig::validate() const {
    if (P != 0 || L != 0) {
        throw std::invalid_argument(
            "ExpansionConfig: only (P, L) = (0, 0) is supported by the built-in "
            "evaluators");
    }
    double m = std::abs(calibration);
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw std::invalid_argument("ExpansionConfig: calibration must be finite nonzero");
    }
    if (!(tau_switch >= 6.0 && tau_switch <= 12.0)) {
        throw std::invalid_argument("ExpansionConfig: tau_switch outside [6, 12]");
    }
}

Complex a00_value(LeadingCoeff convention, const CurveGeometry& geom,
                  const WaveConfig& wave, double theta) {
    if (convention == LeadingCoeff::kirchhoff) return {1.0, 0.0};
    double z = z_function(geom, wave, theta);
    double half = (convention == LeadingCoeff::calibrated) ? 0.5 : 1.0;
    if (std::abs(z) < 1e-12) return {half, 0.0};  // constant continuation at Z = 0
    return {half / z, 0.0};
}

Complex ExpansionTerm::b(const CurveGeometry& geom, const WaveConfig& wave,
                         double theta) const {
    return -a(geom, wave, theta) / Complex(0.0, wave.k);
}

ExpansionTerm leading_term(LeadingCoeff convention) {
    ExpansionTerm t;
    t.p = 0;
    t.l = 0;
    t.a = [convention](const CurveGeometry& g, const WaveConfig& w, double th) {
        return a00_value(convention, g, w, th);
    };
    return t;
}

Complex mt_leading_amplitude(const CurveGeometry& geom, const WaveConfig& wave,
                             double theta) {
    double k23 = std::pow(wave.k, 2.0 / 3.0);
    double tau = std::cbrt(wave.k) * z_function(geom, wave, theta);
    Complex a = a00_value(LeadingCoeff::kirchhoff, geom, wave, theta);
    return k23 * a * psi(tau, 0).value * incident_trace(geom, wave, theta);
}

Complex bt1_leading_amplitude(const CurveGeometry& geom, const WaveConfig& wave,
                              double theta, const ExpansionConfig& cfg) {
    cfg.validate();
    ExpansionTerm t = leading_term(cfg.convention);
    BoundaryData d = boundary_point(geom, theta);
    double nw = dot(d.normal, wave.omega);
    double C = 0.5 * d.curvature;
    Complex coeff = (1.0 - nw) * t.a(geom, wave, theta) + C * t.b(geom, wave, theta);
    double k23 = std::pow(wave.k, 2.0 / 3.0);
    double tau = std::cbrt(wave.k) * z_function(geom, wave, theta);
    return cfg.calibration * k23 * coeff * psi0(tau, cfg) *
           incident_trace(geom, wave, theta);
}

Complex bt2_leading_amplitude(const CurveGeometry& geom, const WaveConfig& wave,
                              double theta, const ExpansionConfig& cfg) {
    cfg.validate();
    Complex lead = bt1_leading_amplitude(geom, wave, theta, cfg);
    BoundaryData d = boundary_point(geom, theta);
    double c = d.curvature, k = wave.k;
    double h_arc = kTwoPi * geom.scale() / 4096.0;
    Complex d2a = arc_second_derivative(
        geom,
        [&](double th) { return a00_value(cfg.convention, geom, wave, th); }, theta,
        h_arc);
    Complex a_sharp = 0.25 * c * c * a00_value(cfg.convention, geom, wave, theta) + d2a;
    Complex b_sharp = -a_sharp / Complex(0.0, k);
    double k23 = std::pow(k, 2.0 / 3.0);
    double tau = std::cbrt(k) * z_function(geom, wave, theta);
    Complex corr = -0.5 * (c / (c * c + k * k)) * k23 * (b_sharp - a_sharp / c) *
                   psi0(tau, cfg) * incident_trace(geom, wave, theta);
    return lead + cfg.calibration * corr;
}

FitResult fit_loglog(const std::vector<double>& k, const std::vector<double>& value) {
    if (k.size() != value.size() || k.size() < 2) {
        throw std::invalid_argument("fit_loglog: need at least 2 matching points");
    }
    std::vector<double> lx(k.size()), ly(k.size());
    for (size_t i = 0; i < k.size(); ++i) {
        if (!(value[i] > 1e-280)) {
            throw std::underflow_error("fit_loglog: gap value underflowed");
        }
        lx[i] = std::log(k[i]);
        ly[i] = std::log(value[i]);
    }
    double n = static_cast<double>(k.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < k.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-30) throw std::invalid_argument("fit_loglog: degenerate k set");
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0, mean = sy / n;
    for (size_t i = 0; i < k.size(); ++i) {
        double r = ly[i] - (intercept + slope * lx[i]);
        ss_res += r * r;
        ss_tot += (ly[i] - mean) * (ly[i] - mean);
    }
    FitResult f;
    f.constant = std::exp(intercept);
    f.rate = slope;
    f.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
    f.k = k;
    f.value = value;
    return f;
}

namespace {

void check_wave_list(const std::vector<WaveConfig>& waves, size_t min_count,
                     double min_k) {
    if (waves.size() < min_count) {
        throw std::invalid_argument("wave list: insufficient points for the fit");
    }
    for (size_t i = 0; i < waves.size(); ++i) {
        if (!(waves[i].k >= min_k)) {
            throw std::invalid_argument("wave list: wavenumber below supported minimum");
        }
        if (i > 0 && !(waves[i].k > waves[i - 1].k)) {
            throw std::invalid_argument("wave list: wavenumbers must be strictly increasing");
        }
    }
}

}  // namespace

Prop1Result estimate_prop1(const CurveGeometry& geom, const std::vector<WaveConfig>& waves,
                           int n_samples, const ExpansionConfig& cfg, double z_min) {
    check_wave_list(waves, 4, 50.0);
    cfg.validate();
    if (n_samples < 64) throw std::invalid_argument("estimate_prop1: n_samples < 64");
    if (!(z_min > 0.0 && z_min < 1.0)) {
        throw std::invalid_argument("estimate_prop1: z_min outside (0, 1)");
    }
    Prop1Result out;
    std::vector<double> ks;
    for (const WaveConfig& wave : waves) {
        RegionMaxima rm;
        double deep_gap = 0.0, deep_target = 0.0;
        for (int i = 0; i < n_samples; ++i) {
            double theta = kTwoPi * i / n_samples;
            RegionLabel lab = classify(geom, wave, theta);
            Complex eta = bt1_leading_amplitude(geom, wave, theta, cfg);
            Complex target = bt1_current(geom, wave, theta);
            double gap = std::abs(eta - target);
            switch (lab.region) {
                case Region::illuminated: rm.illuminated = std::max(rm.illuminated, gap); break;
                case Region::shadow_boundary:
                    rm.shadow_boundary = std::max(rm.shadow_boundary, gap);
                    break;
                case Region::deep_shadow: rm.deep_shadow = std::max(rm.deep_shadow, gap); break;
            }
            if (-lab.n_dot_omega >= z_min) {
                deep_gap = std::max(deep_gap, gap);
                deep_target = std::max(deep_target, std::abs(target));
            }
        }
        if (!(deep_target > 0.0)) {
            throw std::invalid_argument("estimate_prop1: no samples with Z >= z_min");
        }
        out.abs_gap.push_back(rm);
        out.rel_gap.push_back(deep_gap / deep_target);
        ks.push_back(wave.k);
    }
    out.fit = fit_loglog(ks, out.rel_gap);
    return out;
}

Prop2Result estimate_prop2(const CurveGeometry& geom, const std::vector<WaveConfig>& waves,
                           double band_width, int n_samples, bool use_exact) {
    check_wave_list(waves, 2, 1.0);
    if (n_samples < 64) throw std::invalid_argument("estimate_prop2: n_samples < 64");
    if (use_exact && geom.kind != CurveGeometry::Kind::circle) {
        throw std::invalid_argument("estimate_prop2: exact reference requires a circle");
    }
    ExpansionConfig cfg;
    cfg.convention = LeadingCoeff::kirchhoff;
    Prop2Result out;
    std::vector<double> ks;
    for (const WaveConfig& wave : waves) {
        double k13 = std::cbrt(wave.k);
        double k23 = std::pow(wave.k, 2.0 / 3.0);
        MieSolution sol;
        if (use_exact) sol = mie_build(geom.a, wave.k);
        double sup = -1.0;
        for (int i = 0; i < n_samples; ++i) {
            double theta = kTwoPi * i / n_samples;
            double tau = k13 * z_function(geom, wave, theta);
            if (std::abs(tau) > band_width) continue;
            double v = use_exact
                           ? std::abs(exact_current(sol, theta, wave))
                           : std::abs(bt1_leading_amplitude(geom, wave, theta, cfg));
            sup = std::max(sup, v / k23);
        }
        if (sup < 0.0) {
            throw std::invalid_argument("estimate_prop2: empty Fock band");
        }
        out.band_sup.push_back(sup);
        ks.push_back(wave.k);
    }
    out.fit = fit_loglog(ks, out.band_sup);
    return out;
}

}  // namespace hfcur
