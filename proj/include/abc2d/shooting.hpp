#pragma once

#include "abc2d/reduction.hpp"

namespace abc2d {

// Lengths are in units of 1/alpha(E) for r_start and of the outer classical
// turning point for r_max.
struct ShootingConfig {
    double r_start = 1e-6;
    double r_max = 60.0;
    double ode_tol = 1e-10;
    double bisect_tol = 1e-10;  // relative on E
};

struct ShootingResult {
    double energy = 0.0;
    int nodes = 0;       // interior nodes of the solution at the converged energy
    int iterations = 0;  // bisection steps
};

/// Interior sign changes of the outward solution of the radial equation
///   R'' + R'/r + (2 mu E + 2 mu kappa / r - (m + nu)^2 / r^2) R = 0
/// started from the regular Frobenius branch. Equals the number of
/// eigenvalues of the given m below E.
int count_nodes(const RelativeProblem& problem, int m, double energy,
                const ShootingConfig& cfg = {});

/// Eigenvalue with exactly n_r interior nodes, by bisection on count_nodes
/// inside [1.5 E_ref, 0.5 E_ref] with E_ref the hydrogenic estimate.
/// Throws Errc::no_bound_states for kappa <= 0, Errc::no_convergence when the
/// window does not bracket, Errc::stiffness_failure on step-size underflow.
ShootingResult shoot_radial_eigenvalue(const RelativeProblem& problem, int m, int n_r,
                                       const ShootingConfig& cfg = {});

}  // namespace abc2d
