#include <cmath>
#include <numbers>

#include "abc2d/errors.hpp"
#include "abc2d/scatter.hpp"

namespace abc2d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Complex expi(double phase)
{
    return std::polar(1.0, phase);
}

void require_radius(double r)
{
    if (!(r > 0.0) || !std::isfinite(r))
        throw Error(Errc::invalid_argument, "r must be positive and finite");
}

}  // namespace

Parabolic to_parabolic(double r, double theta)
{
    if (!(r >= 0.0) || !std::isfinite(r) || !std::isfinite(theta))
        throw Error(Errc::invalid_argument, "to_parabolic needs r >= 0 and finite theta");
    const double rho = std::sqrt(2.0 * r);
    return {rho * std::cos(0.5 * theta), rho * std::sin(0.5 * theta)};
}

Cartesian from_parabolic(double xi, double eta)
{
    return {0.5 * (xi * xi - eta * eta), xi * eta};
}

Complex coulomb_constant(double beta)
{
    return std::exp(0.5 * beta * kPi + ln_gamma({0.5, -beta})) / std::sqrt(kPi);
}

Complex half_flux_constant(double k, double beta)
{
    return 2.0 * std::sqrt(k / kPi) *
           std::exp(Complex(0.5 * beta * kPi, -0.25 * kPi) + ln_gamma({1.0, -beta}));
}

Complex eval_scattering_field(const ScatteringParams& p, double xi, double eta)
{
    if (!std::isfinite(xi) || !std::isfinite(eta))
        throw Error(Errc::invalid_argument, "parabolic coordinates must be finite");
    const double k = p.k;
    const double beta = p.beta;
    const double xi2 = xi * xi;
    const double eta2 = eta * eta;
    const double x = 0.5 * (xi2 - eta2);
    const Complex z{0.0, k * eta2};

    switch (p.flux_case) {
    case FluxCase::CoulombOnly:
        return coulomb_constant(beta) * expi(k * x) * kummer_m({0.0, beta}, {0.5, 0.0}, z);
    case FluxCase::IntegerFlux: {
        const double r = 0.5 * (xi2 + eta2);
        const Complex regular = expi(k * x) * kummer_m({0.0, beta}, {0.5, 0.0}, z);
        const Complex subtracted =
            expi(k * r) * kummer_m({0.5, -beta}, {1.0, 0.0}, {0.0, -2.0 * k * r});
        return coulomb_constant(beta) * (regular - subtracted);
    }
    case FluxCase::HalfInteger:
        return half_flux_constant(k, beta) * expi(k * x) * eta *
               kummer_m({0.5, beta}, {1.5, 0.0}, z);
    }
    throw Error(Errc::unsupported_flux_case, "unknown flux case");
}

Complex eval_scattering_field_xy(const ScatteringParams& p, double x, double y)
{
    const Complex w = std::sqrt(Complex(2.0 * x, 2.0 * y));
    return eval_scattering_field(p, w.real(), w.imag());
}

Complex incident_wave(const ScatteringParams& p, double r, double theta)
{
    require_radius(r);
    const double s = std::sin(0.5 * theta);
    if (s == 0.0)
        throw Error(Errc::forward_singularity, "incident phase diverges on the forward axis");
    const double x = r * std::cos(theta);
    const double eta2 = 2.0 * r * s * s;
    const Complex wave = expi(p.k * x - p.beta * std::log(p.k * eta2));
    if (p.flux_case == FluxCase::HalfInteger)
        return s > 0.0 ? wave : -wave;
    return wave;
}

Complex scattered_wave(const ScatteringParams& p, double r, double theta)
{
    require_radius(r);
    const Complex f = p.flux_case == FluxCase::HalfInteger ? amplitude_half_flux(p, theta)
                                                           : amplitude_coulomb(p, theta);
    return f * expi(p.k * r + p.beta * std::log(2.0 * p.k * r)) / std::sqrt(r);
}

Complex stationary_wave(const ScatteringParams& p, double r)
{
    if (p.flux_case != FluxCase::IntegerFlux)
        throw Error(Errc::wrong_case, "the stationary wave exists for integer flux only");
    require_radius(r);
    const double delta0 = arg_gamma({0.5, -p.beta});
    const double phase = p.k * r + p.beta * std::log(2.0 * p.k * r) + delta0 - 0.25 * kPi;
    return -expi(delta0) * std::sqrt(2.0 / (kPi * p.k)) * std::cos(phase) / std::sqrt(r);
}

FieldGrid sample_field(const std::function<Complex(double, double)>& psi, double x0, double y0,
                       double dx, double dy, std::size_t nx, std::size_t ny)
{
    if (!(dx > 0.0) || !(dy > 0.0) || nx == 0 || ny == 0)
        throw Error(Errc::invalid_argument, "grid needs positive spacing and size");
    FieldGrid g{x0, y0, dx, dy, nx, ny, {}};
    g.values.resize(nx * ny);
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i)
            g.values[j * nx + i] = psi(x0 + static_cast<double>(i) * dx,
                                       y0 + static_cast<double>(j) * dy);
    return g;
}

std::array<double, 2> current_field(const FieldGrid& grid, std::size_t i, std::size_t j,
                                    double mass)
{
    if (!(mass > 0.0))
        throw Error(Errc::invalid_argument, "mass must be positive");
    if (i == 0 || j == 0 || i + 1 >= grid.nx || j + 1 >= grid.ny)
        throw Error(Errc::grid_boundary, "current needs an interior grid node");
    const Complex psi = grid.at(i, j);
    const Complex dpx = (grid.at(i + 1, j) - grid.at(i - 1, j)) / (2.0 * grid.dx);
    const Complex dpy = (grid.at(i, j + 1) - grid.at(i, j - 1)) / (2.0 * grid.dy);
    return {(std::conj(psi) * dpx).imag() / mass, (std::conj(psi) * dpy).imag() / mass};
}

}  // namespace abc2d
