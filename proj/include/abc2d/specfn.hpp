#pragma once

#include <complex>

namespace abc2d {

using Complex = std::complex<double>;

/// Log-gamma on the principal branch: real on the positive axis and
/// continuous everywhere off the negative real axis (the imaginary part is
/// not reduced mod 2*pi). Throws Errc::pole at z = 0, -1, -2, ...
Complex ln_gamma(Complex z);

/// Im ln_gamma(z), i.e. the continuous argument of Gamma(z).
double arg_gamma(Complex z);

/// Closed-form squared moduli on the imaginary and half-shifted lines:
///   g0 = |Gamma(i beta)|^2     = pi / (beta sinh(beta pi))
///   g1 = |Gamma(1/2 + i beta)|^2 = pi / cosh(beta pi)
/// Throws Errc::division_by_zero for beta = 0 (g0 diverges).
struct GammaModuli {
    double g0 = 0.0;
    double g1 = 0.0;
};
GammaModuli gamma_moduli(double beta);

/// Confluent hypergeometric function M(a, b, z) = 1F1(a; b; z).
///
/// Terminating polynomial when a (or b - a, via Kummer's transformation) is a
/// non-positive integer. Otherwise: Kummer's transformation for Re z < 0,
/// Taylor series for |z| <= 40 (re-summed in double-double arithmetic when
/// the terms cancel), two-sector asymptotic expansion for |z| > 40.
/// Throws Errc::parameter_pole when b is a non-positive integer.
Complex kummer_m(Complex a, Complex b, Complex z);

namespace detail {

struct SeriesSum {
    Complex value;
    int terms = 0;          // number of series terms summed, including the leading 1
    bool extended = false;  // true when the double-double path produced the value
};

/// Raw Taylor series of M(a, b, z), no transformation applied.
SeriesSum kummer_series(Complex a, Complex b, Complex z);

/// Large-|z| expansion for Re z >= 0 (no transformation applied).
Complex kummer_asymptotic(Complex a, Complex b, Complex z);

}  // namespace detail

}  // namespace abc2d
