#pragma once

#include <string_view>
#include <vector>

#include "abc2d/reduction.hpp"
#include "abc2d/specfn.hpp"

namespace abc2d {

/// Labels of psi = R(r) exp(i (m - m0) theta): n_r interior radial nodes,
/// m any integer.
struct QuantumNumbers {
    int n_r = 0;
    int m = 0;

    friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

enum class Branch { plus, minus, unsplit };

std::string_view to_string(Branch b) noexcept;

struct SpectrumLevel {
    double energy = 0.0;
    Branch branch = Branch::unsplit;
    int principal_n = 0;  // m >= 0: n_r + m;  m < 0: n_r + |m|
    std::vector<QuantumNumbers> members;
    int degeneracy = 0;
};

/// False only for nu = 0, m = 0, m0 != 0: the radial part is nonzero at the
/// origin while the angular factor exp(-i m0 theta) is undefined there.
bool is_acceptable(QuantumNumbers qn, int m0, double nu);

/// |m + nu|, the indicial exponent of the radial solution at the origin.
double radial_exponent(int m, double nu);

/// Effective principal number n_r + |m + nu| + 1/2.
double effective_quantum_number(QuantumNumbers qn, double nu);

/// E = -mu kappa^2 / (2 (n_r + |m + nu| + 1/2)^2), hbar = 1.
/// Throws Errc::no_bound_states for kappa <= 0 and Errc::unacceptable_state
/// when is_acceptable fails.
double energy(QuantumNumbers qn, const RelativeProblem& problem);

/// The parameter lambda = kappa sqrt(-mu / (2E)) of the reduced radial
/// equation; it equals n_r + |m + nu| + 1/2 exactly on the spectrum.
double quantization_lambda(double energy, const RelativeProblem& problem);

/// The n_levels lowest distinct energies, ascending, with full member lists.
/// Levels closer than 1e-14 relative are merged (exact at nu = 1/2).
std::vector<SpectrumLevel> spectrum(const RelativeProblem& problem, int n_levels);

/// Normalization constant C_{n_r m} of the bound wavefunction.
double normalization_constant(QuantumNumbers qn, const RelativeProblem& problem);

/// psi_{n_r m}(r, theta) = C e^{-rho/2} rho^{|m+nu|} M(-n_r, 2|m+nu|+1, rho) e^{i(m-m0)theta},
/// rho = sqrt(-8 mu E) r. theta is ignored at r = 0.
Complex eval_bound_wavefunction(QuantumNumbers qn, const RelativeProblem& problem, double r,
                                double theta);

}  // namespace abc2d
