#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "abc2d/reduction.hpp"
#include "abc2d/specfn.hpp"

namespace abc2d {

enum class FluxCase {
    CoulombOnly,  // nu = 0, m0 = 0
    IntegerFlux,  // nu = 0, m0 != 0
    HalfInteger,  // nu = 1/2
};

std::string_view to_string(FluxCase c) noexcept;

struct ScatteringParams {
    double k = 1.0;     // sqrt(2 mu E)
    double beta = 0.0;  // mu kappa / k, negative for repulsion
    FluxCase flux_case = FluxCase::CoulombOnly;
};

/// Throws Errc::unsupported_flux_case unless nu is 0 or 1/2.
ScatteringParams scattering_params(const RelativeProblem& problem, double energy);

ScatteringParams make_scattering_params(double k, double beta, FluxCase flux_case);

/// Angles with |theta mod 2 pi| below this raise Errc::forward_singularity.
inline constexpr double kForwardCone = 1e-3;

/// Coulomb amplitude, length^{1/2}:
///   f_C = Gamma(1/2 - i beta) / Gamma(i beta) * exp(i beta ln sin^2(theta/2) - i pi/4)
///         / sqrt(2 k sin^2(theta/2)).
Complex amplitude_coulomb(const ScatteringParams& p, double theta);

/// Half-integer flux amplitude
///   f = i Gamma(1 - i beta) / Gamma(1/2 + i beta) * exp(i beta ln sin^2(theta/2) + 3 i pi / 4)
///       / (sqrt(2k) sin(theta/2)),
/// odd under theta -> theta + 2 pi.
Complex amplitude_half_flux(const ScatteringParams& p, double theta);

/// beta tanh(beta pi) / (2 k sin^2(theta/2)).
double sigma_coulomb(const ScatteringParams& p, double theta);

/// Interference between the scattered and the stationary wave, integer flux
/// only (Errc::wrong_case otherwise). Signed; zero at beta = 0.
double sigma_interference(const ScatteringParams& p, double theta);

/// beta coth(beta pi) / (2 k sin^2(theta/2)); 1 / (2 pi k sin^2(theta/2)) at beta = 0.
double sigma_half(const ScatteringParams& p, double theta);

struct CrossSectionSample {
    double theta = 0.0;
    double sigma_total = 0.0;
    double sigma_coulomb = 0.0;
    double sigma_cross = 0.0;
};

/// sigma_1 = sigma_C + sigma_x. Errc::wrong_case unless IntegerFlux.
CrossSectionSample sigma_integer_flux(const ScatteringParams& p, double theta);

/// sigma_total = sigma_2, sigma_coulomb = sigma_C for comparison, sigma_cross = 0.
/// Errc::wrong_case unless HalfInteger.
CrossSectionSample sigma_half_flux(const ScatteringParams& p, double theta);

/// Dispatches on p.flux_case (CoulombOnly gives sigma_total = sigma_C).
CrossSectionSample cross_section(const ScatteringParams& p, double theta);

/// kappa -> 0 limit: 0 for CoulombOnly and IntegerFlux, 1/(2 pi k sin^2(theta/2))
/// for HalfInteger.
double limit_ab(FluxCase flux_case, double k, double theta);

/// |kappa| / (2 mu v_c^2 sin^2(theta/2)).
double limit_classical(double kappa, double mu, double v_c, double theta);

struct Parabolic {
    double xi = 0.0;
    double eta = 0.0;
};

struct Cartesian {
    double x = 0.0;
    double y = 0.0;
};

/// xi = sqrt(2r) cos(theta/2), eta = sqrt(2r) sin(theta/2); theta in [0, 4 pi)
/// covers the (xi, eta) plane once.
Parabolic to_parabolic(double r, double theta);

/// x + i y = (xi + i eta)^2 / 2.
Cartesian from_parabolic(double xi, double eta);

/// Exact field psi_0 on the (xi, eta) plane:
///   CoulombOnly  c1 e^{ikx} M(i beta, 1/2, i k eta^2)
///   IntegerFlux  c1 [e^{ikx} M(i beta, 1/2, i k eta^2) - e^{ikr} M(1/2 - i beta, 1, -2ikr)]
///   HalfInteger  c2 e^{ikx} eta M(i beta + 1/2, 3/2, i k eta^2)
/// with c1 = e^{beta pi/2} Gamma(1/2 - i beta) / sqrt(pi) and
/// c2 = 2 sqrt(k/pi) exp(beta pi/2 - i pi/4) Gamma(1 - i beta).
Complex eval_scattering_field(const ScatteringParams& p, double xi, double eta);

/// The same field at a Cartesian point, using the principal square root
/// xi + i eta = sqrt(2 (x + i y)). For HalfInteger this picks one sheet.
Complex eval_scattering_field_xy(const ScatteringParams& p, double x, double y);

/// c1 (the pure Coulomb field at the origin) and c2.
Complex coulomb_constant(double beta);
Complex half_flux_constant(double k, double beta);

/// Leading incident wave exp(i (k x - beta ln(k eta^2))), times sign(sin(theta/2))
/// for HalfInteger. theta in [0, 4 pi).
Complex incident_wave(const ScatteringParams& p, double r, double theta);

/// Leading outgoing wave f(theta) exp(i (k r + beta ln 2kr)) / sqrt(r).
Complex scattered_wave(const ScatteringParams& p, double r, double theta);

/// -e^{i delta_0} sqrt(2/(pi k)) cos(k r + beta ln 2kr + delta_0 - pi/4) / sqrt(r),
/// delta_0 = arg Gamma(1/2 - i beta). IntegerFlux only.
Complex stationary_wave(const ScatteringParams& p, double r);

/// Row-major samples: values[j * nx + i] at (x0 + i dx, y0 + j dy).
struct FieldGrid {
    double x0 = 0.0;
    double y0 = 0.0;
    double dx = 1.0;
    double dy = 1.0;
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<Complex> values;

    Complex at(std::size_t i, std::size_t j) const { return values[j * nx + i]; }
};

FieldGrid sample_field(const std::function<Complex(double, double)>& psi, double x0, double y0,
                       double dx, double dy, std::size_t nx, std::size_t ny);

/// j = Im(psi* grad psi) / mass from centered differences at an interior node.
/// Throws Errc::grid_boundary on the edge or outside.
std::array<double, 2> current_field(const FieldGrid& grid, std::size_t i, std::size_t j,
                                    double mass = 1.0);

}  // namespace abc2d
