#include "hfcur/reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hfcur {

namespace {

constexpr double kPi = std::numbers::pi;

// i^n for n >= 0
Complex ipow(int n) {
    switch (n & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

void check_wave(const MieSolution& sol, const WaveConfig& wave) {
    if (std::abs(wave.k - sol.k) > 1e-12 * sol.k) {
        throw std::invalid_argument("exact_current: wave.k does not match the built solution");
    }
}

}  // namespace

MieSolution mie_build(double radius, double k) {
    if (!(radius > 0.0) || !(k > 0.0)) {
        throw std::domain_error("mie_build: radius and k must be positive");
    }
    double ka = k * radius;
    if (ka > 2000.0) throw std::domain_error("mie_build: k*radius exceeds desk-scale cap 2000");
    int n_terms = static_cast<int>(std::ceil(ka + 10.0 * std::cbrt(ka) + 20.0));
    MieSolution sol;
    sol.radius = radius;
    sol.k = k;
    sol.n_terms = n_terms;
    std::vector<Complex> h = hankel1_sequence(ka, n_terms);
    sol.coefficients.resize(n_terms + 1);
    for (int n = 0; n <= n_terms; ++n) {
        sol.coefficients[n] = 1.0 / h[n];
        if (!std::isfinite(std::abs(sol.coefficients[n]))) {
            throw std::overflow_error("mie_build: Hankel evaluation overflowed");
        }
    }
    // Tail honesty: the last retained mode must be negligible against the
    // head of the series.
    double head = std::abs(sol.coefficients[0]);
    for (int n = 1; n <= n_terms; ++n) head += 2.0 * std::abs(sol.coefficients[n]);
    if (std::abs(sol.coefficients[n_terms]) > 1e-12 * head) {
        throw std::overflow_error("mie_build: truncation tail not converged");
    }
    return sol;
}

Complex exact_current(const MieSolution& sol, double theta, const WaveConfig& wave) {
    check_wave(sol, wave);
    double phi = theta - wave.omega_angle();
    // Chebyshev-style recurrence for cos(n phi)
    double c1 = std::cos(phi), cm = 1.0, cn = c1;
    Complex sum = sol.coefficients[0];
    for (int n = 1; n <= sol.n_terms; ++n) {
        sum += 2.0 * ipow(n) * sol.coefficients[n] * cn;
        double next = 2.0 * c1 * cn - cm;
        cm = cn;
        cn = next;
    }
    return Complex(0.0, -2.0 / (kPi * sol.radius)) * sum;
}

Complex total_field(const MieSolution& sol, double r, double theta,
                    const WaveConfig& wave) {
    check_wave(sol, wave);
    if (r < sol.radius) throw std::domain_error("total_field: r inside the obstacle");
    double ka = sol.k * sol.radius;
    double kr = sol.k * r;
    int N = sol.n_terms;
    std::vector<double> ja = bessel_j_sequence(ka, N);
    std::vector<double> jr = bessel_j_sequence(kr, N);
    std::vector<Complex> hr = hankel1_sequence(kr, N);
    double phi = theta - wave.omega_angle();
    double c1 = std::cos(phi), cm = 1.0, cn = c1;
    Complex sum = jr[0] - ja[0] * sol.coefficients[0] * hr[0];
    for (int n = 1; n <= N; ++n) {
        Complex mode = jr[n] - ja[n] * sol.coefficients[n] * hr[n];
        sum += 2.0 * ipow(n) * mode * cn;
        double next = 2.0 * c1 * cn - cm;
        cm = cn;
        cn = next;
    }
    return sum;
}

}  // namespace hfcur
