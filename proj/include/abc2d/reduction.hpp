#pragma once

#include <string_view>

namespace abc2d {

/// Two point particles, each carrying mass, electric charge and magnetic flux.
/// Units: hbar = c = 1.
struct ParticlePair {
    double mass1 = 1.0;
    double mass2 = 1.0;
    double charge1 = 0.0;
    double charge2 = 0.0;
    double flux1 = 0.0;
    double flux2 = 0.0;
};

/// The five regimes of the bound spectrum, keyed on the flux decomposition
/// alpha = m0 + nu.
enum class SpectralCase {
    PureCoulomb,  // nu = 0, m0 = 0
    IntegerFlux,  // nu = 0, m0 != 0
    GenericLow,   // 0 < nu < 1/2
    HalfInteger,  // nu = 1/2
    GenericHigh,  // 1/2 < nu < 1
};

std::string_view to_string(SpectralCase c) noexcept;

struct FluxDecomposition {
    int m0 = 0;
    double nu = 0.0;
};

/// Relative-motion problem: a particle of reduced mass in the combined
/// Aharonov-Bohm vector potential (dimensionless flux alpha_flux) and the
/// 1/r Coulomb potential -kappa/r. kappa > 0 means attraction.
struct RelativeProblem {
    double reduced_mass = 1.0;
    double kappa = 1.0;
    double alpha_flux = 0.0;
    int m0 = 0;
    double nu = 0.0;

    SpectralCase spectral_case() const;
};

/// Checks charge1/flux1 == charge2/flux2 (relative tolerance 1e-12).
/// Throws Errc::zero_flux if a flux is zero, Errc::ratio_violation otherwise.
void validate_ratio(const ParticlePair& pair);

RelativeProblem reduce_two_body(const ParticlePair& pair);

/// Builds a problem from reduced parameters (mu, kappa, alpha) directly.
RelativeProblem make_relative_problem(double reduced_mass, double kappa, double alpha_flux);

/// m0 = floor(alpha), nu = alpha - m0. nu within 1e-12 of 0, 1/2 or 1 is
/// snapped so the exactly solvable cases can be requested from float input.
FluxDecomposition decompose_flux(double alpha);

SpectralCase classify_case(int m0, double nu);

}  // namespace abc2d
