#include "hfcur/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <quadmath.h>
#include <stdexcept>

namespace hfcur {

namespace {

// Complex arithmetic in __float128, just enough for the Maclaurin branch.
struct QComplex {
    __float128 re, im;
    QComplex(__float128 r = 0, __float128 i = 0) : re(r), im(i) {}
    explicit QComplex(Complex z) : re(z.real()), im(z.imag()) {}
    QComplex operator+(const QComplex& o) const { return {re + o.re, im + o.im}; }
    QComplex operator*(const QComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    QComplex operator*(__float128 s) const { return {re * s, im * s}; }
    QComplex& operator+=(const QComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    __float128 mag1() const { return fabsq(re) + fabsq(im); }
    Complex to_double() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

const __float128 kAi0 =
    (__float128)0.35502805388781722 + (__float128)2.0523363243621199e-17 +
    (__float128)-1.1009245373379416e-34;
const __float128 kAip0 =
    (__float128)-0.25881940379280682 + (__float128)2.5222431116108321e-17 +
    (__float128)1.1690102804178028e-33;

// Ai(z) = Ai(0) f(z) + Ai'(0) g(z), f = sum 3^k (1/3)_k z^{3k}/(3k)!,
// g = sum 3^k (2/3)_k z^{3k+1}/(3k+1)!, accumulated in quad precision so the
// cancellation on the positive axis (amplitude ~ e^{(2/3)|z|^{3/2}}) leaves
// full double accuracy at the 7.5 switchover.
AiryPair airy_series(Complex zd) {
    if (zd == Complex(0.0, 0.0)) {
        return {Complex(static_cast<double>(kAi0), 0.0),
                Complex(static_cast<double>(kAip0), 0.0)};
    }
    QComplex z(zd);
    QComplex z3 = z * z * z;
    QComplex t(1.0);       // f terms, z^{3k}
    QComplex s = z;        // g terms, z^{3k+1}
    QComplex f = t, g = s;
    QComplex ftd(0.0);     // sum of t_k * 3k   (f' after division by z)
    QComplex gtd = s;      // sum of s_k * (3k+1)  (g' after division by z)
    const __float128 one = 1.0;
    for (int k = 0; k < 400; ++k) {
        __float128 d1 = (3.0 * k + 2.0) * (3.0 * k + 3.0);
        __float128 d2 = (3.0 * k + 3.0) * (3.0 * k + 4.0);
        t = t * z3 * (one / d1);
        s = s * z3 * (one / d2);
        f += t;
        g += s;
        ftd += t * (__float128)(3.0 * (k + 1));
        gtd += s * (__float128)(3.0 * (k + 1) + 1.0);
        if (t.mag1() + s.mag1() < (__float128)1e-42 * (f.mag1() + g.mag1())) break;
    }
    QComplex zinv = QComplex(z.re, -z.im) * (one / (z.re * z.re + z.im * z.im));
    QComplex fp = ftd * zinv;
    QComplex gp = gtd * zinv;
    QComplex ai = f * kAi0 + g * kAip0;
    QComplex aip = fp * kAi0 + gp * kAip0;
    return {ai.to_double(), aip.to_double()};
}

// Poincare expansion, valid for |arg z| <= 2pi/3 (DLMF 9.7.5/9.7.6 sector).
AiryPair airy_asymptotic(Complex z) {
    Complex sq = std::sqrt(z);
    Complex zeta = (2.0 / 3.0) * z * sq;
    Complex q = -1.0 / zeta;  // folds in the (-1)^n
    Complex su(1.0), sv(1.0), pw(1.0);
    double u = 1.0, prev = 1e300;
    for (int n = 1; n <= 60; ++n) {
        u *= (6.0 * n - 5.0) * (6.0 * n - 1.0) / (72.0 * n);
        pw *= q;
        Complex tu = u * pw;
        double m = std::abs(tu);
        if (m > prev) break;  // past optimal truncation
        su += tu;
        sv += (u * (6.0 * n + 1.0) / (1.0 - 6.0 * n)) * pw;
        prev = m;
        if (m < 1e-18) break;
    }
    const double inv2sqrtpi = 0.28209479177387814;  // 1/(2 sqrt(pi))
    Complex e = std::exp(-zeta) * inv2sqrtpi;
    Complex z4 = std::sqrt(sq);
    return {e / z4 * su, -e * z4 * sv};
}

const Complex kRot{-0.5, 0.8660254037844386467637231707529362};   // e^{2pi i/3}
const Complex kRotC{-0.5, -0.8660254037844386467637231707529362}; // e^{-2pi i/3}

}  // namespace

namespace detail {

AiryPair airy_ai_ext(Complex z) {
    double az = std::abs(z);
    if (!std::isfinite(az)) throw std::domain_error("airy_ai: non-finite argument");
    AiryPair r;
    if (az <= 7.5) {
        r = airy_series(z);
    } else if (std::abs(std::arg(z)) <= 2.0943951023931953 + 1e-14) {
        r = airy_asymptotic(z);
    } else {
        // Ai(z) = -e^{2pi i/3} Ai(z e^{2pi i/3}) - e^{-2pi i/3} Ai(z e^{-2pi i/3});
        // both rotated arguments land in the asymptotic sector.
        AiryPair au = airy_asymptotic(z * kRot);
        AiryPair av = airy_asymptotic(z * kRotC);
        r.value = -kRot * au.value - kRotC * av.value;
        r.derivative = -kRotC * au.derivative - kRot * av.derivative;
    }
    if (!std::isfinite(std::abs(r.value)) || !std::isfinite(std::abs(r.derivative))) {
        throw std::overflow_error("airy_ai: result overflows double range");
    }
    return r;
}

}  // namespace detail

AiryPair airy_ai(Complex z) {
    if (std::abs(z) > 200.0) {
        throw std::domain_error("airy_ai: |z| outside validated range [0, 200]");
    }
    return detail::airy_ai_ext(z);
}

AiryPair airy_aplus(Complex s, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("airy_aplus: sign must be +1 or -1");
    }
    Complex rot = (sign == 1) ? kRot : kRotC;
    AiryPair a = airy_ai(rot * s);
    return {a.value, rot * a.derivative};
}

std::vector<double> bessel_j_sequence(double x, int n_max) {
    if (!(x > 0.0)) throw std::domain_error("bessel_j_sequence: x must be positive");
    if (n_max < 0) throw std::domain_error("bessel_j_sequence: n_max must be >= 0");
    if (n_max > x + 200.0 + 20.0 * std::cbrt(x)) {
        throw std::domain_error("bessel_j_sequence: n_max beyond supported range");
    }
    int n_start = std::max(n_max, static_cast<int>(std::ceil(x))) + 55 +
                  static_cast<int>(std::ceil(std::cbrt(x)));
    std::vector<double> j(n_start + 2, 0.0);
    j[n_start + 1] = 0.0;
    j[n_start] = 1e-300;
    for (int n = n_start; n > 0; --n) {
        j[n - 1] = (2.0 * n / x) * j[n] - j[n + 1];
        if (std::abs(j[n - 1]) > 1e250) {
            for (int m = n - 1; m <= n_start + 1; ++m) j[m] *= 1e-250;
        }
    }
    double norm = j[0];
    for (int n = 2; n <= n_start; n += 2) norm += 2.0 * j[n];
    j.resize(n_max + 1);
    for (double& v : j) v /= norm;
    return j;
}

std::vector<Complex> hankel1_sequence(double x, int n_max) {
    std::vector<double> j = bessel_j_sequence(x, n_max);
    std::vector<double> y(n_max + 1);
    y[0] = std::cyl_neumann(0, x);
    if (n_max >= 1) y[1] = std::cyl_neumann(1, x);
    for (int n = 1; n < n_max; ++n) {
        y[n + 1] = (2.0 * n / x) * y[n] - y[n - 1];
        if (!std::isfinite(y[n + 1])) {
            throw std::overflow_error("hankel1_sequence: Y_n overflow");
        }
    }
    std::vector<Complex> h(n_max + 1);
    for (int n = 0; n <= n_max; ++n) h[n] = Complex(j[n], y[n]);
    return h;
}

}  // namespace hfcur
