#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hfcur/currents.hpp"

using hfcur::Complex;
using hfcur::CurveGeometry;
using hfcur::ShadowMode;
using hfcur::WaveConfig;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("current kind names round-trip") {
    using hfcur::CurrentKind;
    for (CurrentKind k :
         {CurrentKind::kirchhoff, CurrentKind::bt1, CurrentKind::bt2_2d,
          CurrentKind::bt2_3d_form, CurrentKind::exact, CurrentKind::ansatz_mt,
          CurrentKind::ansatz_bt1, CurrentKind::ansatz_bt2}) {
        CHECK(hfcur::parse_current_kind(hfcur::current_kind_name(k)) == k);
    }
    CHECK_THROWS_AS(hfcur::parse_current_kind("bogus"), std::invalid_argument);
}

TEST_CASE("kirchhoff current at the specular point") {
    CurveGeometry c = CurveGeometry::circle(1.0);
    double k = 12.0;
    WaveConfig w = WaveConfig::make(k, 0.0);
    // theta = pi: n.omega = -1, phase = -k
    Complex got = hfcur::kirchhoff_current(c, w, kPi);
    Complex want = Complex(0.0, -2.0 * k) * std::exp(Complex(0.0, -k));
    CHECK(std::abs(got - want) < 1e-12 * std::abs(want));
}

TEST_CASE("kirchhoff shadow modes") {
    CurveGeometry c = CurveGeometry::circle(1.0);
    WaveConfig w = WaveConfig::make(12.0, 0.0);
    CHECK(hfcur::kirchhoff_current(c, w, 0.0, ShadowMode::zero) == Complex(0.0, 0.0));
    CHECK(std::abs(hfcur::kirchhoff_current(c, w, 0.0, ShadowMode::extended)) > 1.0);
}

TEST_CASE("bt1 current at the specular point") {
    CurveGeometry c = CurveGeometry::circle(1.0);
    double k = 12.0;
    WaveConfig w = WaveConfig::make(k, 0.0);
    Complex got = hfcur::bt1_current(c, w, kPi);
    Complex want = Complex(0.5, -2.0 * k) * std::exp(Complex(0.0, -k));
    CHECK(std::abs(got - want) < 1e-12 * std::abs(want));
}

TEST_CASE("bt2 direct and rationalized forms agree") {
    CurveGeometry e = CurveGeometry::ellipse(2.0, 1.0);
    std::mt19937 gen(11);
    for (int i = 0; i < 200; ++i) {
        double theta = 2.0 * kPi * (gen() / 4294967296.0);
        double k = 5.0 + 400.0 * (gen() / 4294967296.0);
        WaveConfig w = WaveConfig::make(k, 1.1);
        Complex a = hfcur::bt2_current_2d(e, w, theta);
        Complex b = hfcur::bt2_current_2d_rationalized(e, w, theta);
        CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("bt approximations approach kirchhoff in the deep lit limit") {
    CurveGeometry c = CurveGeometry::circle(1.0);
    double k = 2000.0;
    WaveConfig w = WaveConfig::make(k, 0.0);
    Complex kir = hfcur::kirchhoff_current(c, w, kPi);
    CHECK(std::abs(hfcur::bt1_current(c, w, kPi) / kir - 1.0) < 5.0 / k);
    CHECK(std::abs(hfcur::bt2_current_2d(c, w, kPi) / kir - 1.0) < 5.0 / k);
    CHECK(std::abs(hfcur::bt2_current_3d_form(c, w, kPi) / kir - 1.0) < 5.0 / k);
}

TEST_CASE("bt currents mirror symmetry on the circle") {
    CurveGeometry c = CurveGeometry::circle(1.0);
    double a0 = 0.8;
    WaveConfig w = WaveConfig::make(75.0, a0);
    for (double d : {0.4, 1.3, 2.9}) {
        for (auto f : {hfcur::bt1_current, hfcur::bt2_current_2d,
                       hfcur::bt2_current_3d_form}) {
            double m1 = std::abs(f(c, w, a0 + d));
            double m2 = std::abs(f(c, w, a0 - d));
            CHECK(std::abs(m1 - m2) < 1e-12 * std::max(1.0, m1));
        }
    }
}
