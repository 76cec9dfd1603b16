#pragma once

#include <string>
#include <vector>

#include "abc2d/scatter.hpp"

namespace abc2d {

struct VerifyOptions {
    bool small_grid = false;
    double perturb_energy = 0.0;  // relative shift applied to the closed-form energies (fault injection)
    int jobs = 1;
};

struct ShootingRow {
    std::string spectral_case;
    double nu = 0.0;
    int n_r = 0;
    int m = 0;
    double closed_energy = 0.0;
    double shoot_energy = 0.0;
    double rel_err = 0.0;
    int nodes = 0;
    double norm = 0.0;
    bool pass = false;
};

struct CheckRow {
    std::string name;
    double value = 0.0;
    double limit = 0.0;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<ShootingRow> shooting;
    std::vector<CheckRow> checks;

    bool all_pass() const;
};

VerifyReport run_verification(const VerifyOptions& opts);

// Individual measurements, shared by the report and the test suites.

/// Acceptable states with n_r + |m| <= max_sum for each nu (mu = kappa = 1).
std::vector<ShootingRow> shooting_grid(const std::vector<double>& nus, int max_sum,
                                       double perturb_energy, int jobs);

/// Largest relative residual of |Gamma(i b)|^2 b sinh(b pi) = pi and
/// |Gamma(1/2 + i b)|^2 cosh(b pi) = pi over log-spaced b in [0.05, 10].
double gamma_modulus_residual(int points);

/// ln Gamma(z) + ln Gamma(1 - z) - ln(pi / sin(pi z)), reduced mod 2 pi i,
/// over random |z| < 10.
double gamma_reflection_residual(int samples, unsigned seed);

/// ln Gamma(z + 1) - ln Gamma(z) - ln z (mod 2 pi i), same sampling.
double gamma_recurrence_residual(int samples, unsigned seed);

/// Relative gap between the raw Taylor sums M(a, b, z) and e^z M(b - a, b, -z),
/// random complex a, b and |z| <= 20.
double kummer_transform_residual(int samples, unsigned seed);

/// M(-n, b, x) against the Laguerre three-term recurrence, scaled by the sum of
/// absolute terms; n <= max_degree. Returns -1 if a series does not stop after
/// exactly n + 1 terms.
double kummer_polynomial_residual(int max_degree);

struct RateResult {
    double residual_coarse = 0.0;
    double residual_fine = 0.0;
    double rate = 0.0;
};

/// Five-point residual of (d_xi^2 + d_eta^2) psi + (k^2 (xi^2 + eta^2) + 4 beta k) psi
/// at steps h and h/2.
RateResult pde_residual_rate(const ScatteringParams& p, double h);

/// max |psi(-xi, -eta) -+ psi(xi, eta)| over sample points (+ for odd fields).
double field_parity_residual(const ScatteringParams& p);

/// max |psi(r, theta + 2 pi) - e^{2 pi i nu} psi(r, theta)| / max |psi|.
double field_boundary_residual(const ScatteringParams& p);

/// Max over random (beta, theta) of | |f_C|^2 / sigma_C - 1 | and, when
/// `half` is set, | |f|^2 / sigma_2 - 1 |.
double amplitude_consistency_residual(int pairs, unsigned seed, bool half);

/// Max | (sigma_2 / sigma_C) tanh^2(beta pi) - 1 | over the same sampling.
double half_coulomb_ratio_residual(int pairs, unsigned seed);

struct DecayFit {
    double exponent = 0.0;  // least-squares slope of log |residual| against log r
    double residual_first = 0.0;
    double residual_last = 0.0;
};

/// Residual psi_integer - (incident + scattered) - psi_st for r in [50, 200].
/// With leading_order false the incident and scattered sectors carry their
/// full asymptotic series; with true only the leading terms.
DecayFit stationary_residual_fit(double k, double beta, double theta, bool leading_order,
                                 int points);

}  // namespace abc2d
