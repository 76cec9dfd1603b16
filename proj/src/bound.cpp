#include "abc2d/bound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "abc2d/errors.hpp"

namespace abc2d {

namespace {

constexpr double kMergeTol = 1e-14;

void require_bound_states(const RelativeProblem& problem)
{
    if (!(problem.kappa > 0.0))
        throw Error(Errc::no_bound_states,
                    "bound states require an attractive Coulomb field (kappa > 0)");
}

void require_valid_state(QuantumNumbers qn, const RelativeProblem& problem)
{
    require_bound_states(problem);
    if (qn.n_r < 0)
        throw Error(Errc::invalid_argument, "n_r must be non-negative");
    if (!is_acceptable(qn, problem.m0, problem.nu))
        throw Error(Errc::unacceptable_state,
                    "state (n_r=" + std::to_string(qn.n_r) + ", m=" + std::to_string(qn.m) +
                        ") is not regular at the origin for this flux");
}

double energy_from_lambda(double lambda, const RelativeProblem& problem)
{
    return -problem.reduced_mass * problem.kappa * problem.kappa / (2.0 * lambda * lambda);
}

// Principal label as the level tables are written: N = n_r + |m|.
int principal_label(QuantumNumbers qn)
{
    return qn.n_r + std::abs(qn.m);
}

}  // namespace

std::string_view to_string(Branch b) noexcept
{
    switch (b) {
    case Branch::plus: return "plus";
    case Branch::minus: return "minus";
    case Branch::unsplit: return "unsplit";
    }
    return "unknown";
}

bool is_acceptable(QuantumNumbers qn, int m0, double nu)
{
    return !(nu == 0.0 && qn.m == 0 && m0 != 0);
}

double radial_exponent(int m, double nu)
{
    return std::abs(static_cast<double>(m) + nu);
}

double effective_quantum_number(QuantumNumbers qn, double nu)
{
    return static_cast<double>(qn.n_r) + radial_exponent(qn.m, nu) + 0.5;
}

double energy(QuantumNumbers qn, const RelativeProblem& problem)
{
    require_valid_state(qn, problem);
    return energy_from_lambda(effective_quantum_number(qn, problem.nu), problem);
}

double quantization_lambda(double energy, const RelativeProblem& problem)
{
    if (!(energy < 0.0))
        throw Error(Errc::invalid_argument, "quantization_lambda needs E < 0");
    return problem.kappa * std::sqrt(-problem.reduced_mass / (2.0 * energy));
}

std::vector<SpectrumLevel> spectrum(const RelativeProblem& problem, int n_levels)
{
    require_bound_states(problem);
    if (n_levels < 1)
        throw Error(Errc::invalid_argument, "n_levels must be positive");

    // Every state with lambda <= n_max + 1/2 has n_r + |m| <= n_max, and each
    // N >= 1 contributes at least one distinct level, so this window holds
    // n_levels complete levels.
    const int n_max = n_levels + 1;
    const double lambda_cap = n_max + 0.5;

    struct Candidate {
        double lambda;
        QuantumNumbers qn;
    };
    std::vector<Candidate> states;
    for (int big_n = 0; big_n <= n_max; ++big_n) {
        for (int m = -big_n; m <= big_n; ++m) {
            const QuantumNumbers qn{big_n - std::abs(m), m};
            if (!is_acceptable(qn, problem.m0, problem.nu))
                continue;
            const double lambda = effective_quantum_number(qn, problem.nu);
            if (lambda <= lambda_cap)
                states.push_back({lambda, qn});
        }
    }
    std::sort(states.begin(), states.end(), [](const Candidate& a, const Candidate& b) {
        if (a.lambda != b.lambda)
            return a.lambda < b.lambda;
        if (a.qn.n_r != b.qn.n_r)
            return a.qn.n_r > b.qn.n_r;
        return a.qn.m > b.qn.m;
    });

    std::vector<SpectrumLevel> levels;
    double level_lambda = 0.0;
    for (const Candidate& c : states) {
        const bool merge = !levels.empty() &&
                           std::abs(c.lambda - level_lambda) <= kMergeTol * level_lambda;
        if (!merge) {
            if (static_cast<int>(levels.size()) == n_levels)
                break;
            levels.push_back({});
            level_lambda = c.lambda;
            levels.back().energy = energy_from_lambda(c.lambda, problem);
        }
        levels.back().members.push_back(c.qn);
    }

    const bool split = problem.nu != 0.0 && problem.nu != 0.5;
    for (SpectrumLevel& level : levels) {
        // Keep the listing order stable: by n_r descending, then m descending.
        std::sort(level.members.begin(), level.members.end(),
                  [](const QuantumNumbers& a, const QuantumNumbers& b) {
                      return a.n_r != b.n_r ? a.n_r > b.n_r : a.m > b.m;
                  });
        level.degeneracy = static_cast<int>(level.members.size());
        const QuantumNumbers& first = level.members.front();
        if (split) {
            level.branch = first.m >= 0 ? Branch::plus : Branch::minus;
            level.principal_n = principal_label(first);
        } else if (problem.nu == 0.5) {
            // E_N^+ == E_{N+1}^-: label by the plus member.
            level.branch = Branch::unsplit;
            const auto plus = std::find_if(level.members.begin(), level.members.end(),
                                           [](const QuantumNumbers& q) { return q.m >= 0; });
            level.principal_n = principal_label(*plus);
        } else {
            level.branch = Branch::unsplit;
            level.principal_n = principal_label(first);
        }
    }
    return levels;
}

double normalization_constant(QuantumNumbers qn, const RelativeProblem& problem)
{
    require_valid_state(qn, problem);
    const double s = radial_exponent(qn.m, problem.nu);
    const double n = static_cast<double>(qn.n_r);
    const double two_lambda = 2.0 * n + 2.0 * s + 1.0;
    // Gamma(n + 2s + 1) / (Gamma(2s + 1)^2 n!) evaluated in logs.
    const double log_ratio = std::lgamma(n + 2.0 * s + 1.0) - 2.0 * std::lgamma(2.0 * s + 1.0) -
                             std::lgamma(n + 1.0);
    const double prefactor = 4.0 * problem.reduced_mass * problem.kappa / two_lambda;
    return prefactor * std::sqrt(std::exp(log_ratio) / (2.0 * std::numbers::pi * two_lambda));
}

Complex eval_bound_wavefunction(QuantumNumbers qn, const RelativeProblem& problem, double r,
                                double theta)
{
    require_valid_state(qn, problem);
    if (!(r >= 0.0) || !std::isfinite(r))
        throw Error(Errc::invalid_argument, "r must be non-negative and finite");

    const double s = radial_exponent(qn.m, problem.nu);
    const double lambda = effective_quantum_number(qn, problem.nu);
    const double inverse_length = 2.0 * problem.reduced_mass * problem.kappa / lambda;  // sqrt(-8 mu E)
    const double rho = inverse_length * r;
    const double c = normalization_constant(qn, problem);

    // rho^s at the origin by its limit.
    const double rho_pow = rho == 0.0 ? (s == 0.0 ? 1.0 : 0.0) : std::pow(rho, s);
    if (rho_pow == 0.0)
        return 0.0;
    const double poly =
        kummer_m(Complex(-qn.n_r, 0.0), Complex(2.0 * s + 1.0, 0.0), Complex(rho, 0.0)).real();
    const double radial = c * std::exp(-0.5 * rho) * rho_pow * poly;
    if (r == 0.0 || qn.m == problem.m0)
        return radial;
    return std::polar(1.0, static_cast<double>(qn.m - problem.m0) * theta) * radial;
}

}  // namespace abc2d
