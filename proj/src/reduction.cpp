#include "abc2d/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "abc2d/errors.hpp"

namespace abc2d {

namespace {

constexpr double kRatioTol = 1e-12;
constexpr double kSnapTol = 1e-12;
// floor() must fit in an int with room for the nu -> 1 carry.
constexpr double kMaxAbsAlpha = 1e9;

void require_finite(double v, const char* name)
{
    if (!std::isfinite(v))
        throw Error(Errc::invalid_argument, std::string(name) + " must be finite");
}

}  // namespace

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::ratio_violation: return "RatioViolation";
    case Errc::zero_flux: return "ZeroFlux";
    case Errc::pole: return "PoleError";
    case Errc::parameter_pole: return "ParameterPole";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::no_bound_states: return "NoBoundStates";
    case Errc::unacceptable_state: return "Unacceptable";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::stiffness_failure: return "StiffnessFailure";
    case Errc::quadrature_failure: return "QuadratureFailure";
    case Errc::unsupported_flux_case: return "UnsupportedFluxCase";
    case Errc::forward_singularity: return "ForwardSingularity";
    case Errc::wrong_case: return "WrongCase";
    case Errc::grid_boundary: return "GridBoundary";
    }
    return "Unknown";
}

std::string_view to_string(SpectralCase c) noexcept
{
    switch (c) {
    case SpectralCase::PureCoulomb: return "PureCoulomb";
    case SpectralCase::IntegerFlux: return "IntegerFlux";
    case SpectralCase::GenericLow: return "GenericLow";
    case SpectralCase::HalfInteger: return "HalfInteger";
    case SpectralCase::GenericHigh: return "GenericHigh";
    }
    return "Unknown";
}

SpectralCase RelativeProblem::spectral_case() const
{
    return classify_case(m0, nu);
}

void validate_ratio(const ParticlePair& pair)
{
    require_finite(pair.charge1, "charge1");
    require_finite(pair.charge2, "charge2");
    require_finite(pair.flux1, "flux1");
    require_finite(pair.flux2, "flux2");
    if (pair.flux1 == 0.0 || pair.flux2 == 0.0)
        throw Error(Errc::zero_flux, "flux entries must be nonzero for the charge/flux ratio to exist");

    // q1/Phi1 == q2/Phi2, cross-multiplied so it stays finite.
    const double lhs = pair.charge1 * pair.flux2;
    const double rhs = pair.charge2 * pair.flux1;
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (std::abs(lhs - rhs) > kRatioTol * scale)
        throw Error(Errc::ratio_violation,
                    "charge/flux ratios differ; the two-body problem does not separate");
}

RelativeProblem reduce_two_body(const ParticlePair& pair)
{
    require_finite(pair.mass1, "mass1");
    require_finite(pair.mass2, "mass2");
    if (pair.mass1 <= 0.0 || pair.mass2 <= 0.0)
        throw Error(Errc::invalid_argument, "masses must be positive");
    validate_ratio(pair);

    const double mu = pair.mass1 * pair.mass2 / (pair.mass1 + pair.mass2);
    // (q1, Phi1) = (q, Phi/Z), (q2, Phi2) = (-Zq, -Phi):
    // kappa = Z q^2 = -q1 q2 and q Phi = -q1 Phi2.
    const double kappa = -pair.charge1 * pair.charge2;
    const double alpha = -pair.charge1 * pair.flux2 / (2.0 * std::numbers::pi);
    return make_relative_problem(mu, kappa, alpha);
}

RelativeProblem make_relative_problem(double reduced_mass, double kappa, double alpha_flux)
{
    require_finite(reduced_mass, "reduced_mass");
    require_finite(kappa, "kappa");
    require_finite(alpha_flux, "alpha_flux");
    if (reduced_mass <= 0.0)
        throw Error(Errc::invalid_argument, "reduced mass must be positive");

    const FluxDecomposition d = decompose_flux(alpha_flux);
    return RelativeProblem{reduced_mass, kappa, alpha_flux, d.m0, d.nu};
}

FluxDecomposition decompose_flux(double alpha)
{
    require_finite(alpha, "alpha");
    if (std::abs(alpha) > kMaxAbsAlpha)
        throw Error(Errc::invalid_argument, "|alpha| too large for an integer decomposition");

    double m0 = std::floor(alpha);
    double nu = alpha - m0;
    if (std::abs(nu) < kSnapTol) {
        nu = 0.0;
    } else if (std::abs(nu - 0.5) < kSnapTol) {
        nu = 0.5;
    } else if (std::abs(nu - 1.0) < kSnapTol) {
        nu = 0.0;
        m0 += 1.0;
    }
    return FluxDecomposition{static_cast<int>(m0), nu};
}

SpectralCase classify_case(int m0, double nu)
{
    if (!(nu >= 0.0 && nu < 1.0))
        throw Error(Errc::invalid_argument, "nu must lie in [0, 1)");
    if (nu == 0.0)
        return m0 == 0 ? SpectralCase::PureCoulomb : SpectralCase::IntegerFlux;
    if (nu < 0.5)
        return SpectralCase::GenericLow;
    if (nu == 0.5)
        return SpectralCase::HalfInteger;
    return SpectralCase::GenericHigh;
}

}  // namespace abc2d
