#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hfcur/ansatz.hpp"
#include "hfcur/currents.hpp"

using hfcur::Complex;
using hfcur::CurveGeometry;
using hfcur::ExpansionConfig;
using hfcur::LeadingCoeff;
using hfcur::WaveConfig;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("convention names round-trip") {
    for (LeadingCoeff c : {LeadingCoeff::kirchhoff, LeadingCoeff::unit_over_z,
                           LeadingCoeff::calibrated}) {
        CHECK(hfcur::parse_leading_coeff(hfcur::leading_coeff_name(c)) == c);
    }
    CHECK_THROWS_AS(hfcur::parse_leading_coeff("none"), std::invalid_argument);
}

TEST_CASE("a00 values per convention") {
    CurveGeometry c = CurveGeometry::circle(1.0);
    WaveConfig w = WaveConfig::make(100.0, 0.0);
    // theta = pi: Z = 1
    CHECK(hfcur::a00_value(LeadingCoeff::kirchhoff, c, w, kPi) == Complex(1.0, 0.0));
    CHECK(hfcur::a00_value(LeadingCoeff::unit_over_z, c, w, kPi) == Complex(1.0, 0.0));
    CHECK(hfcur::a00_value(LeadingCoeff::calibrated, c, w, kPi) == Complex(0.5, 0.0));
    // theta = 2pi/3: Z = 1/2
    double th = 2.0 * kPi / 3.0;
    CHECK(hfcur::a00_value(LeadingCoeff::unit_over_z, c, w, th).real() ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(hfcur::a00_value(LeadingCoeff::calibrated, c, w, th).real() ==
          doctest::Approx(1.0).epsilon(1e-12));
    // shadow boundary: continuous continuation, no blow-up
    CHECK(std::abs(hfcur::a00_value(LeadingCoeff::calibrated, c, w, kPi / 2)) < 1e6);
}

TEST_CASE("expansion config guards") {
    ExpansionConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.P = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.P = 0;
    cfg.tau_switch = 5.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.tau_switch = 8.0;
    cfg.calibration = Complex(0.0, 0.0);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("b is constructively tied to a") {
    CurveGeometry c = CurveGeometry::circle(1.0);
    WaveConfig w = WaveConfig::make(150.0, 0.0);
    hfcur::ExpansionTerm t = hfcur::leading_term(LeadingCoeff::calibrated);
    for (double theta : {0.3, 1.9, kPi, 5.1}) {
        Complex a = t.a(c, w, theta);
        CHECK(t.b(c, w, theta) == -a / Complex(0.0, w.k));
    }
}

TEST_CASE("mt leading recovers kirchhoff in the deep lit region") {
    CurveGeometry c = CurveGeometry::circle(1.0);
    WaveConfig w = WaveConfig::make(800.0, 0.0);
    Complex mt = hfcur::mt_leading_amplitude(c, w, kPi);
    Complex kir = hfcur::kirchhoff_current(c, w, kPi, hfcur::ShadowMode::extended);
    CHECK(std::abs(mt / kir - 1.0) < 5e-3);
}

TEST_CASE("bt1 leading approximates the bt1 current in the deep lit region") {
    CurveGeometry c = CurveGeometry::circle(1.0);
    ExpansionConfig cfg;
    WaveConfig w = WaveConfig::make(400.0, 0.0);
    Complex eta = hfcur::bt1_leading_amplitude(c, w, kPi, cfg);
    Complex bt1 = hfcur::bt1_current(c, w, kPi);
    CHECK(std::abs(eta - bt1) / std::abs(bt1) < 0.05);
}

TEST_CASE("bt2 leading stays close to bt1 leading") {
    // the second-order correction carries a 1/(c^2+k^2) factor
    CurveGeometry c = CurveGeometry::circle(1.0);
    ExpansionConfig cfg;
    WaveConfig w = WaveConfig::make(200.0, 0.0);
    for (double theta : {2.2, kPi}) {
        Complex a = hfcur::bt1_leading_amplitude(c, w, theta, cfg);
        Complex b = hfcur::bt2_leading_amplitude(c, w, theta, cfg);
        CHECK(std::abs(a - b) < 1e-2 * std::abs(a));
    }
}

TEST_CASE("fit_loglog recovers an exact power law") {
    std::vector<double> k = {100, 200, 400, 800};
    std::vector<double> v;
    for (double x : k) v.push_back(3.7 * std::pow(x, -1.25));
    hfcur::FitResult f = hfcur::fit_loglog(k, v);
    CHECK(f.rate == doctest::Approx(-1.25).epsilon(1e-12));
    CHECK(f.constant == doctest::Approx(3.7).epsilon(1e-12));
    CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit_loglog guards") {
    CHECK_THROWS_AS(hfcur::fit_loglog({100.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(hfcur::fit_loglog({100.0, 200.0}, {1.0, 0.0}),
                    std::underflow_error);
}

TEST_CASE("prop1 estimator input guards") {
    CurveGeometry c = CurveGeometry::circle(1.0);
    ExpansionConfig cfg;
    std::vector<WaveConfig> too_few = {WaveConfig::make(100, 0), WaveConfig::make(200, 0)};
    CHECK_THROWS_AS(hfcur::estimate_prop1(c, too_few, 128, cfg), std::invalid_argument);
    std::vector<WaveConfig> low_k = {WaveConfig::make(10, 0), WaveConfig::make(100, 0),
                                     WaveConfig::make(200, 0), WaveConfig::make(400, 0)};
    CHECK_THROWS_AS(hfcur::estimate_prop1(c, low_k, 128, cfg), std::invalid_argument);
    std::vector<WaveConfig> not_inc = {WaveConfig::make(100, 0), WaveConfig::make(100, 0),
                                       WaveConfig::make(200, 0), WaveConfig::make(400, 0)};
    CHECK_THROWS_AS(hfcur::estimate_prop1(c, not_inc, 128, cfg), std::invalid_argument);
    std::vector<WaveConfig> ok = {WaveConfig::make(100, 0), WaveConfig::make(200, 0),
                                  WaveConfig::make(400, 0), WaveConfig::make(800, 0)};
    CHECK_THROWS_AS(hfcur::estimate_prop1(c, ok, 32, cfg), std::invalid_argument);
    CHECK_THROWS_AS(hfcur::estimate_prop1(c, ok, 128, cfg, 1.5), std::invalid_argument);
}

TEST_CASE("prop2 estimator input guards") {
    CurveGeometry c = CurveGeometry::circle(1.0);
    std::vector<WaveConfig> waves = {WaveConfig::make(100, 0), WaveConfig::make(200, 0)};
    CHECK_THROWS_AS(hfcur::estimate_prop2(c, waves, 1.0, 32), std::invalid_argument);
    // a vanishing band contains no grid samples
    CHECK_THROWS_AS(hfcur::estimate_prop2(c, waves, 1e-12, 70), std::invalid_argument);
    CurveGeometry e = CurveGeometry::ellipse(2.0, 1.0);
    CHECK_THROWS_AS(hfcur::estimate_prop2(e, waves, 1.0, 128, true),
                    std::invalid_argument);
}
