#pragma once

#include <complex>
#include <vector>

namespace hfcur {

using Complex = std::complex<double>;

struct AiryPair {
    Complex value;
    Complex derivative;
};

// Ai(z), Ai'(z) on |z| <= 200.  Maclaurin series in quad precision for
// |z| <= 7.5, Poincare asymptotic series beyond, connection formula in the
// sector |arg z| > 2pi/3.  Throws std::domain_error outside the validated
// disk, std::overflow_error if the result is not finite.
AiryPair airy_ai(Complex z);

// A_pm(s) = Ai(e^{pm 2pi i/3} s); derivative taken with respect to s.
AiryPair airy_aplus(Complex s, int sign = +1);

namespace detail {
// Same algorithm without the public 200-radius cap; the asymptotic branch
// only gains accuracy further out.  Internal use (Fock contour tails).
AiryPair airy_ai_ext(Complex z);
}

// J_n(x), n = 0..n_max, Miller downward recurrence with sum normalization.
std::vector<double> bessel_j_sequence(double x, int n_max);

// H^{(1)}_n(x) = J_n(x) + i Y_n(x), n = 0..n_max.  J from the Miller pass,
// Y by upward recurrence seeded at orders 0 and 1.  Throws
// std::overflow_error when Y_n leaves the finite range.
std::vector<Complex> hankel1_sequence(double x, int n_max);

}  // namespace hfcur
