#include <cmath>

#include "doctest.h"
#include "hfcur/fock.hpp"

using hfcur::Complex;
using hfcur::FockEval;
using hfcur::FockPath;

namespace {

void check_psi(double tau, Complex want, double rel_tol = 1e-8) {
    FockEval e = hfcur::psi(tau, 0);
    CHECK(std::abs(e.value - want) <= rel_tol * std::abs(want) + 1e-12);
}

}  // namespace

TEST_CASE("calibration constants") {
    const hfcur::FockCalibration& cal = hfcur::fock_calibration();
    // gamma = e^{-i pi/6} / (2 pi)
    Complex gamma_ref(0.13783222516610058, -0.07957746958201904);
    CHECK(std::abs(cal.gamma - gamma_ref) < 1e-6 * std::abs(gamma_ref));
    CHECK(std::abs(std::abs(cal.gamma) - 1.0 / (2.0 * M_PI)) < 1e-7);
    CHECK(std::abs(cal.c1 - Complex(0.5, 0.0)) < 2e-3);
    CHECK(std::abs(cal.c2 - Complex(-0.0385, -0.9982)) < 2e-2);
}

TEST_CASE("psi reference values") {
    check_psi(0.0, {0.387910591061, -0.671880829541});
    check_psi(-3.0, {0.00146724322836, -0.00296411508518});
    check_psi(-6.0, {-6.34378510414e-6, 4.08954088125e-6}, 1e-6);
    check_psi(2.0, {0.113864127591, -4.02222599841});
    check_psi(5.0, {0.0199862478933, -10.0003190109});
    check_psi(10.0, {0.00500024140694, -20.0000100187}, 1e-7);
}

TEST_CASE("psi shadow decay ratio") {
    double r = std::abs(hfcur::psi(-6.0, 0).value) / std::abs(hfcur::psi(2.0, 0).value);
    CHECK(r == doctest::Approx(1.8757e-6).epsilon(1e-4));
}

TEST_CASE("psi lit normalization") {
    Complex ratio = hfcur::psi(10.0, 0).value / Complex(0.0, -20.0);
    CHECK(std::abs(ratio - 1.0) < 1e-3);
}

TEST_CASE("path selection respects tau_switch") {
    CHECK(hfcur::psi(7.0, 0, 8.0).path == FockPath::quadrature);
    CHECK(hfcur::psi(8.0, 0, 8.0).path == FockPath::asymptotic);
    CHECK(hfcur::psi(7.0, 0, 6.5).path == FockPath::asymptotic);
    CHECK(hfcur::psi(20.0, 0).path == FockPath::asymptotic);
}

TEST_CASE("paths agree on the overlap window") {
    for (double tau : {6.0, 7.5, 9.0, 10.5, 12.0}) {
        for (int l = 0; l <= 2; ++l) {
            FockEval q = hfcur::psi_quadrature(tau, l, 1.0);
            FockEval a = hfcur::psi_asymptotic(tau, l);
            CHECK(std::abs(q.value - a.value) <= q.err_estimate + a.err_estimate);
        }
    }
}

TEST_CASE("derivatives are consistent with differences") {
    double h = 1e-3;
    for (double tau : {-4.0, -1.0, 0.5, 3.0}) {
        for (int l = 1; l <= 2; ++l) {
            Complex fd = (hfcur::psi(tau + h, l - 1).value -
                          hfcur::psi(tau - h, l - 1).value) /
                         (2.0 * h);
            Complex an = hfcur::psi(tau, l).value;
            CHECK(std::abs(fd - an) < 1e-4 * std::max(1.0, std::abs(an)));
        }
    }
}

TEST_CASE("quadrature is contour independent") {
    for (double tau : {-3.0, 0.0, 4.0}) {
        Complex a = hfcur::psi_quadrature(tau, 0, 1.0).value;
        Complex b = hfcur::psi_quadrature(tau, 0, 1.7).value;
        CHECK(std::abs(a - b) < 1e-8 * std::max(1e-30, std::abs(a)));
    }
}

TEST_CASE("err estimates are positive and sane") {
    for (double tau : {-10.0, 0.0, 9.0, 30.0}) {
        FockEval e = hfcur::psi(tau, 0);
        CHECK(e.err_estimate > 0.0);
        CHECK(e.err_estimate < 1e-3 * std::max(1.0, std::abs(e.value)));
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(hfcur::psi(-25.0, 0), std::domain_error);
    CHECK_THROWS_AS(hfcur::psi(60.0, 0), std::domain_error);
    CHECK_THROWS_AS(hfcur::psi(0.0, 3), std::domain_error);
    CHECK_THROWS_AS(hfcur::psi(0.0, 0, 5.0), std::domain_error);
    CHECK_THROWS_AS(hfcur::psi_quadrature(15.0, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(hfcur::psi_quadrature(0.0, 0, 8.0), std::domain_error);
    CHECK_THROWS_AS(hfcur::psi_asymptotic(-1.0, 0), std::domain_error);
}
