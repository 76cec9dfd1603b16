#include "abc2d/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "abc2d/errors.hpp"

namespace abc2d {

namespace {

constexpr double kMaxError = 1e-7;
constexpr unsigned kMaxDepth = 20;
constexpr double kTargetTol = 1e-12;

}  // namespace

double integrate_density(const std::function<Complex(double)>& psi, double length_scale)
{
    if (!(length_scale > 0.0) || !std::isfinite(length_scale))
        throw Error(Errc::invalid_argument, "length scale must be positive");

    auto integrand = [&](double t) {
        const double one_minus = 1.0 - t;
        if (one_minus <= 0.0)
            return 0.0;
        const double rho = t / one_minus;
        const double value = std::norm(psi(length_scale * rho)) * rho / (one_minus * one_minus);
        // e^{-rho} underflow times a huge polynomial tail.
        return std::isfinite(value) ? value : 0.0;
    };

    double error = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, 0.0, 1.0, kMaxDepth, kTargetTol, &error);
    if (!(error <= kMaxError))
        throw Error(Errc::quadrature_failure,
                    "adaptive error estimate " + std::to_string(error) + " exceeds 1e-7");
    return 2.0 * std::numbers::pi * length_scale * length_scale * integral;
}

double quad_norm(QuantumNumbers qn, const RelativeProblem& problem)
{
    energy(qn, problem);  // same preconditions as the wavefunction
    const double lambda = effective_quantum_number(qn, problem.nu);
    const double inverse_length = 2.0 * problem.reduced_mass * problem.kappa / lambda;
    // The angular factor has unit modulus; theta = 0 is representative.
    return integrate_density(
        [&](double r) { return eval_bound_wavefunction(qn, problem, r, 0.0); },
        1.0 / inverse_length);
}

}  // namespace abc2d
