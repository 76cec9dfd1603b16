#include <array>
#include <cmath>
#include <numbers>

#include "abc2d/errors.hpp"
#include "abc2d/specfn.hpp"

namespace abc2d {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_pole(Complex z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Valid for Re z >= 1/2.
Complex lanczos_ln_gamma(Complex z)
{
    z -= 1.0;
    Complex x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        x += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + kLanczosG + 0.5;
    const double half_ln_2pi = 0.5 * std::log(2.0 * kPi);
    return half_ln_2pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

Complex ln_gamma(Complex z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(Errc::invalid_argument, "ln_gamma: non-finite argument");
    if (is_pole(z))
        throw Error(Errc::pole, "ln_gamma: argument is a non-positive integer");

    if (z.real() >= 0.5)
        return lanczos_ln_gamma(z);

    // ln Gamma(z) = ln Gamma(z + n) - sum_k log(z + k). Each log stays on its
    // principal sheet in the open upper (lower) half-plane, so the sum is the
    // analytic continuation from the positive axis.
    const int n = static_cast<int>(std::ceil(0.5 - z.real()));
    Complex shift = 0.0;
    for (int k = 0; k < n; ++k)
        shift += std::log(z + static_cast<double>(k));
    return lanczos_ln_gamma(z + static_cast<double>(n)) - shift;
}

double arg_gamma(Complex z)
{
    return ln_gamma(z).imag();
}

GammaModuli gamma_moduli(double beta)
{
    if (!std::isfinite(beta))
        throw Error(Errc::invalid_argument, "gamma_moduli: beta must be finite");

    const double x = std::abs(beta) * kPi;
    GammaModuli g;
    if (x > 20.0) {
        // sinh and cosh overflow long before the moduli underflow.
        const double e = std::exp(-x);
        const double e2 = e * e;
        g.g0 = 2.0 * kPi * e / (std::abs(beta) * (1.0 - e2));
        g.g1 = 2.0 * kPi * e / (1.0 + e2);
        return g;
    }
    g.g1 = kPi / std::cosh(x);
    if (beta == 0.0)
        throw Error(Errc::division_by_zero, "gamma_moduli: |Gamma(i beta)|^2 diverges at beta = 0");
    g.g0 = kPi / (beta * std::sinh(beta * kPi));
    return g;
}

}  // namespace abc2d
