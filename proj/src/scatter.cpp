#include "abc2d/scatter.hpp"

#include <cmath>
#include <numbers>

#include "abc2d/errors.hpp"

namespace abc2d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void require_case(const ScatteringParams& p, FluxCase wanted, const char* what)
{
    if (p.flux_case != wanted)
        throw Error(Errc::wrong_case, std::string(what) + " is defined for the " +
                                          std::string(to_string(wanted)) + " case only, got " +
                                          std::string(to_string(p.flux_case)));
}

// sin(theta/2), after rejecting the forward cone.
double half_angle_sine(double theta)
{
    if (!std::isfinite(theta))
        throw Error(Errc::invalid_argument, "theta must be finite");
    if (std::abs(std::remainder(theta, 2.0 * kPi)) < kForwardCone)
        throw Error(Errc::forward_singularity,
                    "cross sections diverge in the forward direction (theta = 0 mod 2 pi)");
    return std::sin(0.5 * theta);
}

// beta tanh(beta pi) and beta coth(beta pi); both even in beta.
double beta_tanh(double beta)
{
    return beta * std::tanh(beta * kPi);
}

double beta_coth(double beta)
{
    const double x = beta * kPi;
    if (std::abs(x) < 1e-6)
        return (1.0 + x * x / 3.0) / kPi;
    return beta / std::tanh(x);
}

}  // namespace

std::string_view to_string(FluxCase c) noexcept
{
    switch (c) {
    case FluxCase::CoulombOnly: return "coulomb";
    case FluxCase::IntegerFlux: return "integer";
    case FluxCase::HalfInteger: return "half";
    }
    return "unknown";
}

ScatteringParams make_scattering_params(double k, double beta, FluxCase flux_case)
{
    if (!(k > 0.0) || !std::isfinite(k))
        throw Error(Errc::invalid_argument, "k must be positive and finite");
    if (!std::isfinite(beta))
        throw Error(Errc::invalid_argument, "beta must be finite");
    return {k, beta, flux_case};
}

ScatteringParams scattering_params(const RelativeProblem& problem, double energy)
{
    if (!(energy > 0.0) || !std::isfinite(energy))
        throw Error(Errc::invalid_argument, "scattering energy must be positive and finite");
    FluxCase fc;
    if (problem.nu == 0.0)
        fc = problem.m0 == 0 ? FluxCase::CoulombOnly : FluxCase::IntegerFlux;
    else if (problem.nu == 0.5)
        fc = FluxCase::HalfInteger;
    else
        throw Error(Errc::unsupported_flux_case,
                    "closed-form scattering needs nu = 0 or nu = 1/2, got nu = " +
                        std::to_string(problem.nu));
    const double k = std::sqrt(2.0 * problem.reduced_mass * energy);
    return make_scattering_params(k, problem.reduced_mass * problem.kappa / k, fc);
}

Complex amplitude_coulomb(const ScatteringParams& p, double theta)
{
    const double s = half_angle_sine(theta);
    const double log_s2 = std::log(s * s);
    // 1/Gamma(i beta) = i beta / Gamma(1 + i beta) keeps beta = 0 regular.
    const Complex log_ratio = ln_gamma({0.5, -p.beta}) - ln_gamma({1.0, p.beta});
    const Complex phase = kI * (p.beta * log_s2 - 0.25 * kPi);
    return kI * p.beta * std::exp(log_ratio + phase) / (std::sqrt(2.0 * p.k) * std::abs(s));
}

Complex amplitude_half_flux(const ScatteringParams& p, double theta)
{
    const double s = half_angle_sine(theta);
    const double log_s2 = std::log(s * s);
    const Complex log_ratio = ln_gamma({1.0, -p.beta}) - ln_gamma({0.5, p.beta});
    const Complex phase = kI * (p.beta * log_s2 + 0.75 * kPi);
    return kI * std::exp(log_ratio + phase) / (std::sqrt(2.0 * p.k) * s);
}

double sigma_coulomb(const ScatteringParams& p, double theta)
{
    const double s = half_angle_sine(theta);
    return beta_tanh(p.beta) / (2.0 * p.k * s * s);
}

double sigma_interference(const ScatteringParams& p, double theta)
{
    require_case(p, FluxCase::IntegerFlux, "sigma_interference");
    const double s = half_angle_sine(theta);
    if (p.beta == 0.0)
        return 0.0;
    const double delta0 = arg_gamma({0.5, -p.beta});
    const double delta1 = arg_gamma({0.0, p.beta});
    const double phase = std::remainder(delta0 + delta1 - p.beta * std::log(s * s), 2.0 * kPi);
    return -std::sqrt(beta_tanh(p.beta)) / (std::sqrt(kPi) * p.k) * std::cos(phase) / std::abs(s);
}

double sigma_half(const ScatteringParams& p, double theta)
{
    const double s = half_angle_sine(theta);
    return beta_coth(p.beta) / (2.0 * p.k * s * s);
}

CrossSectionSample sigma_integer_flux(const ScatteringParams& p, double theta)
{
    require_case(p, FluxCase::IntegerFlux, "sigma_integer_flux");
    CrossSectionSample out;
    out.theta = theta;
    out.sigma_coulomb = sigma_coulomb(p, theta);
    out.sigma_cross = sigma_interference(p, theta);
    out.sigma_total = out.sigma_coulomb + out.sigma_cross;
    return out;
}

CrossSectionSample sigma_half_flux(const ScatteringParams& p, double theta)
{
    require_case(p, FluxCase::HalfInteger, "sigma_half_flux");
    CrossSectionSample out;
    out.theta = theta;
    out.sigma_total = sigma_half(p, theta);
    out.sigma_coulomb = sigma_coulomb(p, theta);
    return out;
}

CrossSectionSample cross_section(const ScatteringParams& p, double theta)
{
    switch (p.flux_case) {
    case FluxCase::IntegerFlux: return sigma_integer_flux(p, theta);
    case FluxCase::HalfInteger: return sigma_half_flux(p, theta);
    case FluxCase::CoulombOnly: break;
    }
    CrossSectionSample out;
    out.theta = theta;
    out.sigma_coulomb = sigma_coulomb(p, theta);
    out.sigma_total = out.sigma_coulomb;
    return out;
}

double limit_ab(FluxCase flux_case, double k, double theta)
{
    if (!(k > 0.0))
        throw Error(Errc::invalid_argument, "k must be positive");
    const double s = half_angle_sine(theta);
    if (flux_case != FluxCase::HalfInteger)
        return 0.0;
    return 1.0 / (2.0 * kPi * k * s * s);
}

double limit_classical(double kappa, double mu, double v_c, double theta)
{
    if (!(mu > 0.0) || !(v_c > 0.0))
        throw Error(Errc::invalid_argument, "mu and v_c must be positive");
    const double s = half_angle_sine(theta);
    return std::abs(kappa) / (2.0 * mu * v_c * v_c * s * s);
}

}  // namespace abc2d
