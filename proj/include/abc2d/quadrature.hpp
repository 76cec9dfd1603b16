#pragma once

#include <functional>

#include "abc2d/bound.hpp"

namespace abc2d {

/// 2 pi * int_0^inf |psi(r)|^2 r dr for an angle-independent modulus, with
/// r = length_scale * rho and rho = t / (1 - t) mapped onto [0, 1].
/// Throws Errc::quadrature_failure when the error estimate exceeds 1e-7.
double integrate_density(const std::function<Complex(double)>& psi, double length_scale);

/// Norm of eval_bound_wavefunction over the plane; 1 when the closed-form
/// normalization is right.
double quad_norm(QuantumNumbers qn, const RelativeProblem& problem);

}  // namespace abc2d
