// Outward shooting for the radial equation. Deliberately independent of the
// closed-form bound-state code: no confluent hypergeometric evaluation here.

#include "abc2d/shooting.hpp"

#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "abc2d/errors.hpp"

namespace abc2d {

namespace {

namespace odeint = boost::numeric::odeint;

using State = std::array<double, 2>;

constexpr double kRescaleAbove = 1e200;
constexpr long kMaxSteps = 2'000'000;
constexpr int kMaxBisections = 200;

// In t = ln r with y = (R, dR/dt) the radial equation reads
//   d^2 R / dt^2 = (s^2 - 2 mu E r^2 - 2 mu kappa r) R.
struct RadialSystem {
    double s2;
    double two_mu_e;
    double two_mu_kappa;

    void operator()(const State& y, State& dydt, double t) const
    {
        const double r = std::exp(t);
        dydt[0] = y[1];
        dydt[1] = (s2 - (two_mu_e * r + two_mu_kappa) * r) * y[0];
    }
};

int sign_of(double v)
{
    return (v > 0.0) - (v < 0.0);
}

}  // namespace

int count_nodes(const RelativeProblem& problem, int m, double energy, const ShootingConfig& cfg)
{
    if (!(energy < 0.0))
        throw Error(Errc::invalid_argument, "count_nodes needs E < 0");
    if (!(cfg.r_start > 0.0) || !(cfg.r_max > 0.0) || !(cfg.ode_tol > 0.0))
        throw Error(Errc::invalid_argument, "shooting configuration must be positive");

    const double mu = problem.reduced_mass;
    const double kappa = problem.kappa;
    const double s = std::abs(static_cast<double>(m) + problem.nu);
    const double abs_e = -energy;

    const double alpha = std::sqrt(8.0 * mu * abs_e);
    const double r0 = cfg.r_start / alpha;
    const double disc = std::max(kappa * kappa - 2.0 * abs_e * s * s / mu, 0.0);
    const double r_outer = (kappa + std::sqrt(disc)) / (2.0 * abs_e);
    const double r_end = cfg.r_max * r_outer;
    if (!(r0 < r_end))
        throw Error(Errc::invalid_argument, "r_start must lie inside r_max");

    // Regular Frobenius branch R = r^s (1 + c1 r + c2 r^2 + ...), divided by r0^s.
    const double c1 = -2.0 * mu * kappa / (2.0 * s + 1.0);
    const double c2 = -(2.0 * mu * kappa * c1 - 2.0 * mu * abs_e) / (4.0 * s + 4.0);
    State y = {1.0 + (c1 + c2 * r0) * r0, s + ((s + 1.0) * c1 + (s + 2.0) * c2 * r0) * r0};

    const RadialSystem sys{s * s, -2.0 * mu * abs_e, 2.0 * mu * kappa};
    auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-30, cfg.ode_tol);

    double t = std::log(r0);
    const double t_end = std::log(r_end);
    double dt = 1e-3;
    int nodes = 0;
    int last_sign = sign_of(y[0]);
    long steps = 0;

    while (t < t_end) {
        if (++steps > kMaxSteps)
            throw Error(Errc::stiffness_failure, "shooting: step budget exhausted");
        dt = std::min(dt, t_end - t);
        if (stepper.try_step(sys, y, t, dt) == odeint::fail) {
            if (dt < 1e-14 * std::max(1.0, std::abs(t)))
                throw Error(Errc::stiffness_failure, "shooting: step size underflow");
            continue;
        }

        const int sg = sign_of(y[0]);
        if (sg != 0) {
            if (last_sign != 0 && sg != last_sign)
                ++nodes;
            last_sign = sg;
        }
        if (std::abs(y[0]) > kRescaleAbove || std::abs(y[1]) > kRescaleAbove) {
            y[0] /= kRescaleAbove;
            y[1] /= kRescaleAbove;
        }
        // Past the turning point a solution moving away from zero never
        // returns: y2' has the sign of y1 there.
        if (std::exp(t) > r_outer && y[0] * y[1] > 0.0)
            break;
    }
    return nodes;
}

ShootingResult shoot_radial_eigenvalue(const RelativeProblem& problem, int m, int n_r,
                                       const ShootingConfig& cfg)
{
    if (!(problem.kappa > 0.0))
        throw Error(Errc::no_bound_states, "shooting requires kappa > 0");
    if (n_r < 0)
        throw Error(Errc::invalid_argument, "n_r must be non-negative");
    if (!(cfg.bisect_tol > 0.0))
        throw Error(Errc::invalid_argument, "bisect_tol must be positive");

    // Hydrogenic estimate used only to place the search window.
    const double lambda = n_r + std::abs(static_cast<double>(m) + problem.nu) + 0.5;
    const double e_ref =
        -problem.reduced_mass * problem.kappa * problem.kappa / (2.0 * lambda * lambda);

    double lo = 1.5 * e_ref;
    double hi = 0.5 * e_ref;
    if (count_nodes(problem, m, lo, cfg) > n_r || count_nodes(problem, m, hi, cfg) <= n_r)
        throw Error(Errc::no_convergence,
                    "shooting: no eigenvalue with the requested node count in [1.5 E, 0.5 E]");

    ShootingResult result;
    while (hi - lo > cfg.bisect_tol * std::abs(0.5 * (lo + hi))) {
        if (++result.iterations > kMaxBisections)
            throw Error(Errc::no_convergence, "shooting: bisection did not converge");
        const double mid = 0.5 * (lo + hi);
        if (count_nodes(problem, m, mid, cfg) > n_r)
            hi = mid;
        else
            lo = mid;
    }
    result.energy = 0.5 * (lo + hi);
    result.nodes = count_nodes(problem, m, lo, cfg);
    return result;
}

}  // namespace abc2d
