#include "hfcur/fock.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hfcur {

namespace {

constexpr double kGL16[16][2] = {
    {-9.89400934991649938510e-01, 2.71524594117540374327e-02},
    {-9.44575023073232600268e-01, 6.22535239386477062817e-02},
    {-8.65631202387831755196e-01, 9.51585116824925913992e-02},
    {-7.55404408355002998654e-01, 1.24628971255534029550e-01},
    {-6.17876244402643770570e-01, 1.49595988816576763725e-01},
    {-4.58016777657227369680e-01, 1.69156519395002619133e-01},
    {-2.81603550779258915426e-01, 1.82603415044923611532e-01},
    {-9.50125098376374543907e-02, 1.89450610455068585436e-01},
    {9.50125098376374543907e-02, 1.89450610455068585436e-01},
    {2.81603550779258915426e-01, 1.82603415044923611532e-01},
    {4.58016777657227369680e-01, 1.69156519395002619133e-01},
    {6.17876244402643770570e-01, 1.49595988816576763725e-01},
    {7.55404408355002998654e-01, 1.24628971255534029550e-01},
    {8.65631202387831755196e-01, 9.51585116824925913992e-02},
    {9.44575023073232600268e-01, 6.22535239386477062817e-02},
    {9.89400934991649938510e-01, 2.71524594117540374327e-02},
};

const Complex kRotPlus{-0.5, 0.8660254037844386467637231707529362};

struct Moments {
    Complex m0{0, 0}, m1{0, 0}, m2{0, 0};
    double mass0 = 0.0, mass1 = 0.0, mass2 = 0.0;  // sum of |contributions|
    double tail_resid = 0.0;                       // last tail contribution
};

inline Complex integrand(Complex s, double tau) {
    Complex z = kRotPlus * s;
    Complex aplus = detail::airy_ai_ext(z).value;
    Complex phase = std::exp(Complex(0.0, -1.0) * s * tau);
    return phase / aplus;
}

// Accumulate int s^j f(s) ds over one straight segment a + t*dir, t in [t0, t1].
void add_segment(Moments& m, Complex base, Complex dir, double t0, double t1,
                 double tau, double sgn) {
    double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
    Complex c0{0, 0}, c1{0, 0}, c2{0, 0};
    for (const auto& nw : kGL16) {
        Complex s = base + dir * (mid + half * nw[0]);
        Complex f = integrand(s, tau) * (nw[1] * half) * dir;
        c0 += f;
        c1 += f * s;
        c2 += f * s * s;
    }
    m.m0 += sgn * c0;
    m.m1 += sgn * c1;
    m.m2 += sgn * c2;
    m.mass0 += std::abs(c0);
    m.mass1 += std::abs(c1);
    m.mass2 += std::abs(c2);
    m.tail_resid = std::abs(c0);
}

Moments raw_moments(double tau, double s_scale) {
    double sl = std::max(14.0, tau > 0 ? tau * tau + 12.0 * std::sqrt(tau) + 9.0 : 0.0);
    sl *= s_scale;
    double sr = 14.0 * s_scale;
    Moments m;
    // real segment
    int npan = static_cast<int>(std::ceil((sl + sr) / 0.4));
    double w = (sl + sr) / npan;
    for (int p = 0; p < npan; ++p) {
        add_segment(m, Complex(0, 0), Complex(1, 0), -sl + p * w, -sl + (p + 1) * w, tau,
                    1.0);
    }
    // rotated tails: right tail descends for tau >= 0 (phase decay) and
    // ascends for tau < 0; left tail always ascends at 5pi/6 and enters with
    // a minus sign (traversed from infinity inward).
    double right_ang = (tau >= 0.0) ? -0.5235987755982988 : 0.5235987755982988;
    const double left_ang = 2.6179938779914944;  // 5pi/6
    struct Tail {
        Complex base;
        double ang;
        double sgn;
    } tails[2] = {{Complex(sr, 0.0), right_ang, 1.0}, {Complex(-sl, 0.0), left_ang, -1.0}};
    for (const Tail& t : tails) {
        Complex dir = std::exp(Complex(0.0, t.ang));
        double r = 0.0;
        const double wt = 0.5;
        for (int it = 0; it < 400; ++it) {
            add_segment(m, t.base, dir, r, r + wt, tau, t.sgn);
            r += wt;
            if (it >= 8 &&
                m.tail_resid < std::max(1e-17 * std::abs(m.m0), 1e-22 * m.mass0))
                break;
            if (it == 399) throw std::runtime_error("fock: contour tail did not converge");
        }
    }
    return m;
}

struct RawEval {
    Complex v[3];
    double err[3];
};

// Uncalibrated Psi^{(l)}: E = e^{-i tau^3/3}, I_j = moments;
//   Psi   = E I0
//   Psi'  = E (-i tau^2 I0 - i I1)
//   Psi'' = E ((-tau^4 - 2i tau) I0 - 2 tau^2 I1 - I2)
RawEval raw_psi(double tau, double s_scale) {
    Moments m = raw_moments(tau, s_scale);
    double t2 = tau * tau;
    Complex E = std::exp(Complex(0.0, -tau * t2 / 3.0));
    RawEval r;
    r.v[0] = E * m.m0;
    r.v[1] = E * (Complex(0.0, -t2) * m.m0 - Complex(0.0, 1.0) * m.m1);
    r.v[2] = E * (Complex(-t2 * t2, -2.0 * tau) * m.m0 - 2.0 * t2 * m.m1 - m.m2);
    double e0 = 1e-15 * m.mass0 + 2.0 * m.tail_resid;
    double e1 = 1e-15 * m.mass1;
    double e2 = 1e-15 * m.mass2;
    r.err[0] = e0;
    r.err[1] = t2 * e0 + e1;
    r.err[2] = (t2 * t2 + 2.0 * std::abs(tau)) * e0 + 2.0 * t2 * e1 + e2;
    return r;
}

FockCalibration calibrate() {
    // Fit raw Psi on tau in {6..12} to c0 tau + c1 tau^-2 + c2 tau^-5 and
    // normalize so the leading coefficient is exactly -2i.
    const double taus[7] = {6, 7, 8, 9, 10, 11, 12};
    double ata[3][3] = {};
    Complex aty[3] = {};
    for (double t : taus) {
        double basis[3] = {t, std::pow(t, -2.0), std::pow(t, -5.0)};
        Complex y = raw_psi(t, 1.0).v[0];
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) ata[i][j] += basis[i] * basis[j];
            aty[i] += basis[i] * y;
        }
    }
    // 3x3 Gaussian elimination with the complex right-hand side
    Complex rhs[3] = {aty[0], aty[1], aty[2]};
    double a[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = ata[i][j];
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r2 = col + 1; r2 < 3; ++r2)
            if (std::abs(a[r2][col]) > std::abs(a[piv][col])) piv = r2;
        std::swap(a[col], a[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (int r2 = col + 1; r2 < 3; ++r2) {
            double f = a[r2][col] / a[col][col];
            for (int j = col; j < 3; ++j) a[r2][j] -= f * a[col][j];
            rhs[r2] -= f * rhs[col];
        }
    }
    Complex c[3];
    for (int i = 2; i >= 0; --i) {
        Complex s = rhs[i];
        for (int j = i + 1; j < 3; ++j) s -= a[i][j] * c[j];
        c[i] = s / a[i][i];
    }
    FockCalibration cal;
    cal.gamma = Complex(0.0, -2.0) / c[0];
    cal.c1 = cal.gamma * c[1];
    cal.c2 = cal.gamma * c[2];
    return cal;
}

}  // namespace

const FockCalibration& fock_calibration() {
    static const FockCalibration cal = calibrate();
    return cal;
}

FockEval psi_quadrature(double tau, int l, double s_scale) {
    if (l < 0 || l > 2) throw std::domain_error("psi: derivative order must be 0..2");
    if (!(tau >= -20.0 && tau <= 12.5)) {
        throw std::domain_error("psi_quadrature: tau outside [-20, 12.5]");
    }
    if (!(s_scale >= 1.0 && s_scale <= 4.0)) {
        throw std::domain_error("psi_quadrature: s_scale outside [1, 4]");
    }
    const FockCalibration& cal = fock_calibration();
    RawEval r = raw_psi(tau, s_scale);
    double ag = std::abs(cal.gamma);
    return {tau, l, cal.gamma * r.v[l], FockPath::quadrature, ag * r.err[l]};
}

FockEval psi_asymptotic(double tau, int l) {
    if (l < 0 || l > 2) throw std::domain_error("psi: derivative order must be 0..2");
    if (!(tau > 0.0)) throw std::domain_error("psi_asymptotic: tau must be positive");
    const FockCalibration& cal = fock_calibration();
    double t2 = tau * tau, t3 = t2 * tau;
    Complex v;
    double err;
    switch (l) {
        case 0:
            v = Complex(0.0, -2.0 * tau) + cal.c1 / t2 + cal.c2 / (t2 * t3);
            err = 120.0 * std::pow(tau, -8.0);
            break;
        case 1:
            v = Complex(0.0, -2.0) - 2.0 * cal.c1 / t3 - 5.0 * cal.c2 / (t3 * t3);
            err = 900.0 * std::pow(tau, -9.0);
            break;
        default:
            v = 6.0 * cal.c1 / (t2 * t2) + 30.0 * cal.c2 / (t3 * t3 * tau);
            err = 1200.0 * std::pow(tau, -10.0);
            break;
    }
    return {tau, l, v, FockPath::asymptotic, err};
}

FockEval psi(double tau, int l, double tau_switch) {
    if (!(tau >= -20.0 && tau <= 50.0)) {
        throw std::domain_error("psi: tau outside validated range [-20, 50]");
    }
    if (l < 0 || l > 2) throw std::domain_error("psi: derivative order must be 0..2");
    if (!(tau_switch >= 6.0 && tau_switch <= 12.0)) {
        throw std::domain_error("psi: tau_switch outside [6, 12]");
    }
    if (tau >= tau_switch) return psi_asymptotic(tau, l);
    return psi_quadrature(tau, l, 1.0);
}

}  // namespace hfcur
