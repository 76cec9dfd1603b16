#include "abc2d/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "abc2d/bound.hpp"
#include "abc2d/oracle.hpp"
#include "abc2d/parallel.hpp"

namespace abc2d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrapped_gap(Complex d)
{
    return std::abs(Complex(d.real(), std::remainder(d.imag(), kTwoPi)));
}

// Uniform in the disc |z| < radius, kept 1e-3 away from the integers.
std::vector<Complex> disc_samples(int n, double radius, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-radius, radius);
    std::vector<Complex> out;
    while (static_cast<int>(out.size()) < n) {
        const Complex z(u(rng), u(rng));
        if (std::abs(z) >= radius)
            continue;
        if (std::abs(z.imag()) < 1e-3 && std::abs(z.real() - std::round(z.real())) < 1e-3)
            continue;
        out.push_back(z);
    }
    return out;
}

struct BetaTheta {
    double beta;
    double theta;
};

std::vector<BetaTheta> beta_theta_samples(int n, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_beta(std::log(0.05), std::log(10.0));
    std::uniform_real_distribution<double> angle(0.01, kTwoPi - 0.01);
    std::vector<BetaTheta> out;
    for (int i = 0; i < n; ++i) {
        const double b = std::exp(log_beta(rng));
        out.push_back({i % 2 == 0 ? b : -b, angle(rng)});
    }
    return out;
}

double slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CheckRow below(std::string name, double value, double limit, std::string detail = {})
{
    return {std::move(name), value, limit, value < limit, std::move(detail)};
}

}  // namespace

bool VerifyReport::all_pass() const
{
    return std::all_of(shooting.begin(), shooting.end(), [](const auto& r) { return r.pass; }) &&
           std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::vector<ShootingRow> shooting_grid(const std::vector<double>& nus, int max_sum,
                                       double perturb_energy, int jobs)
{
    std::vector<ShootingRow> rows;
    for (double nu : nus) {
        const RelativeProblem problem = make_relative_problem(1.0, 1.0, nu);
        for (int sum = 0; sum <= max_sum; ++sum)
            for (int m = -sum; m <= sum; ++m) {
                const QuantumNumbers qn{sum - std::abs(m), m};
                if (!is_acceptable(qn, problem.m0, problem.nu))
                    continue;
                ShootingRow row;
                row.spectral_case = std::string(to_string(problem.spectral_case()));
                row.nu = nu;
                row.n_r = qn.n_r;
                row.m = qn.m;
                rows.push_back(row);
            }
    }

    parallel_for(rows.size(), jobs, [&](std::size_t i) {
        ShootingRow& row = rows[i];
        const RelativeProblem problem = make_relative_problem(1.0, 1.0, row.nu);
        const QuantumNumbers qn{row.n_r, row.m};
        row.closed_energy = energy(qn, problem) * (1.0 + perturb_energy);
        const ShootingResult shot = shoot_radial_eigenvalue(problem, row.m, row.n_r);
        row.shoot_energy = shot.energy;
        row.nodes = shot.nodes;
        row.rel_err = std::abs(shot.energy - row.closed_energy) / std::abs(row.closed_energy);
        row.norm = quad_norm(qn, problem);
        row.pass = row.rel_err < 1e-6 && row.nodes == row.n_r && std::abs(row.norm - 1.0) < 1e-6;
    });
    return rows;
}

double gamma_modulus_residual(int points)
{
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        const double b = 0.05 * std::pow(10.0 / 0.05, t);
        const double g0 = std::norm(std::exp(ln_gamma({0.0, b})));
        const double g1 = std::norm(std::exp(ln_gamma({0.5, b})));
        worst = std::max(worst, std::abs(g0 * b * std::sinh(b * kPi) / kPi - 1.0));
        worst = std::max(worst, std::abs(g1 * std::cosh(b * kPi) / kPi - 1.0));
    }
    return worst;
}

double gamma_reflection_residual(int samples, unsigned seed)
{
    double worst = 0.0;
    for (const Complex z : disc_samples(samples, 10.0, seed)) {
        const Complex lhs = ln_gamma(z) + ln_gamma(1.0 - z);
        const Complex rhs = std::log(kPi / std::sin(kPi * z));
        worst = std::max(worst, wrapped_gap(lhs - rhs));
    }
    return worst;
}

double gamma_recurrence_residual(int samples, unsigned seed)
{
    double worst = 0.0;
    for (const Complex z : disc_samples(samples, 10.0, seed))
        worst = std::max(worst, wrapped_gap(ln_gamma(z + 1.0) - ln_gamma(z) - std::log(z)));
    return worst;
}

double kummer_transform_residual(int samples, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-5.0, 5.0);
    std::uniform_real_distribution<double> positive(0.5, 5.0);
    double worst = 0.0;
    for (const Complex z : disc_samples(samples, 20.0, seed ^ 0x9e3779b9u)) {
        const Complex a(box(rng), box(rng));
        const Complex b(positive(rng), box(rng));
        const Complex direct = detail::kummer_series(a, b, z).value;
        const Complex transformed = std::exp(z) * detail::kummer_series(b - a, b, -z).value;
        worst = std::max(worst, std::abs(direct - transformed) / std::abs(direct));
    }
    return worst;
}

double kummer_polynomial_residual(int max_degree)
{
    double worst = 0.0;
    for (int n = 0; n <= max_degree; ++n)
        for (const double b : {1.0, 1.5, 2.5, 4.0, 7.5})
            for (const double x : {0.1, 1.0, 3.0, 7.5, 15.0, 30.0}) {
                const detail::SeriesSum sum = detail::kummer_series(-n, b, x);
                if (sum.terms != n + 1)
                    return -1.0;
                // Generalized Laguerre L_n^{(b-1)}(x) = binom(n + b - 1, n) M(-n, b, x).
                const double al = b - 1.0;
                double prev = 1.0;
                double cur = 1.0 + al - x;
                double binom = 1.0;
                for (int j = 1; j <= n; ++j)
                    binom *= (al + j) / j;
                double lag = n == 0 ? 1.0 : cur;
                for (int j = 1; j < n; ++j) {
                    const double next = ((2.0 * j + 1.0 + al - x) * cur - (j + al) * prev) / (j + 1.0);
                    prev = cur;
                    cur = next;
                    lag = cur;
                }
                const double scale = detail::kummer_series(-n, b, -x).value.real();
                worst = std::max(worst, std::abs(sum.value.real() - lag / binom) / scale);
            }
    return worst;
}

RateResult pde_residual_rate(const ScatteringParams& p, double h)
{
    const double k = p.k;
    const double c = 4.0 * p.beta * k;
    auto residual = [&](double step) {
        double worst = 0.0;
        for (const double xi : {-1.7, -0.6, 0.4, 0.9, 1.4, 1.9})
            for (const double eta : {-1.2, 0.3, 0.8, 1.3, 1.8}) {
                const Complex psi = eval_scattering_field(p, xi, eta);
                const Complex lap = (eval_scattering_field(p, xi + step, eta) +
                                     eval_scattering_field(p, xi - step, eta) +
                                     eval_scattering_field(p, xi, eta + step) +
                                     eval_scattering_field(p, xi, eta - step) - 4.0 * psi) /
                                    (step * step);
                const Complex res = lap + (k * k * (xi * xi + eta * eta) + c) * psi;
                worst = std::max(worst, std::abs(res));
            }
        return worst;
    };
    RateResult out;
    out.residual_coarse = residual(h);
    out.residual_fine = residual(0.5 * h);
    out.rate = std::log2(out.residual_coarse / out.residual_fine);
    return out;
}

double field_parity_residual(const ScatteringParams& p)
{
    const double sign = p.flux_case == FluxCase::HalfInteger ? -1.0 : 1.0;
    double worst = 0.0;
    for (const double xi : {0.0, 0.35, 1.2, 3.7, 9.1})
        for (const double eta : {0.0, 0.5, 2.2, 6.3, 11.0}) {
            const Complex a = eval_scattering_field(p, xi, eta);
            const Complex b = eval_scattering_field(p, -xi, -eta);
            worst = std::max(worst, std::abs(b - sign * a));
        }
    return worst;
}

double field_boundary_residual(const ScatteringParams& p)
{
    const double nu = p.flux_case == FluxCase::HalfInteger ? 0.5 : 0.0;
    const Complex twist = std::polar(1.0, kTwoPi * nu);
    double worst = 0.0;
    double largest = 0.0;
    for (const double r : {0.3, 1.0, 4.5, 20.0, 60.0})
        for (const double theta : {0.2, 1.1, 2.5, 3.9, 5.6}) {
            const Parabolic a = to_parabolic(r, theta);
            const Parabolic b = to_parabolic(r, theta + kTwoPi);
            const Complex pa = eval_scattering_field(p, a.xi, a.eta);
            const Complex pb = eval_scattering_field(p, b.xi, b.eta);
            worst = std::max(worst, std::abs(pb - twist * pa));
            largest = std::max(largest, std::abs(pa));
        }
    return worst / largest;
}

double amplitude_consistency_residual(int pairs, unsigned seed, bool half)
{
    double worst = 0.0;
    for (const auto& [beta, theta] : beta_theta_samples(pairs, seed)) {
        if (half) {
            const ScatteringParams p = make_scattering_params(1.3, beta, FluxCase::HalfInteger);
            worst = std::max(worst,
                             std::abs(std::norm(amplitude_half_flux(p, theta)) / sigma_half(p, theta) - 1.0));
        } else {
            const ScatteringParams p = make_scattering_params(1.3, beta, FluxCase::CoulombOnly);
            worst = std::max(worst, std::abs(std::norm(amplitude_coulomb(p, theta)) /
                                                 sigma_coulomb(p, theta) -
                                             1.0));
        }
    }
    return worst;
}

double half_coulomb_ratio_residual(int pairs, unsigned seed)
{
    double worst = 0.0;
    for (const auto& [beta, theta] : beta_theta_samples(pairs, seed)) {
        const ScatteringParams p = make_scattering_params(0.7, beta, FluxCase::HalfInteger);
        const CrossSectionSample s = sigma_half_flux(p, theta);
        const double t = std::tanh(beta * kPi);
        worst = std::max(worst, std::abs(s.sigma_total / s.sigma_coulomb * t * t - 1.0));
    }
    return worst;
}

DecayFit stationary_residual_fit(double k, double beta, double theta, bool leading_order,
                                 int points)
{
    const ScatteringParams p = make_scattering_params(k, beta, FluxCase::IntegerFlux);
    const Complex c1 = coulomb_constant(beta);
    std::vector<double> log_r;
    std::vector<double> log_res;
    DecayFit fit;
    for (int i = 0; i < points; ++i) {
        const double r = 50.0 * std::pow(4.0, static_cast<double>(i) / (points - 1));
        const Parabolic pc = to_parabolic(r, theta);
        const Complex full = eval_scattering_field(p, pc.xi, pc.eta);
        Complex waves;
        if (leading_order) {
            waves = incident_wave(p, r, theta) + scattered_wave(p, r, theta);
        } else {
            const double x = r * std::cos(theta);
            const double eta2 = pc.eta * pc.eta;
            waves = c1 * std::polar(1.0, k * x) *
                    detail::kummer_asymptotic({0.0, beta}, {0.5, 0.0}, {0.0, k * eta2});
        }
        const double res = std::abs(full - waves - stationary_wave(p, r));
        if (i == 0)
            fit.residual_first = res;
        fit.residual_last = res;
        log_r.push_back(std::log(r));
        log_res.push_back(std::log(res));
    }
    fit.exponent = slope(log_r, log_res);
    return fit;
}

VerifyReport run_verification(const VerifyOptions& opts)
{
    VerifyReport report;
    const bool small = opts.small_grid;
    const std::vector<double> nus =
        small ? std::vector<double>{0.0, 0.5} : std::vector<double>{0.0, 0.25, 0.5, 0.75};
    report.shooting = shooting_grid(nus, small ? 2 : 4, opts.perturb_energy, opts.jobs);

    double worst_e = 0.0;
    double worst_norm = 0.0;
    int node_mismatch = 0;
    for (const ShootingRow& row : report.shooting) {
        worst_e = std::max(worst_e, row.rel_err);
        worst_norm = std::max(worst_norm, std::abs(row.norm - 1.0));
        node_mismatch += row.nodes != row.n_r;
    }
    auto& c = report.checks;
    c.push_back(below("shooting_vs_closed_form", worst_e, 1e-6, "max relative energy error"));
    c.push_back({"shooting_node_count", static_cast<double>(node_mismatch), 0.0, node_mismatch == 0,
                 "states whose node count differs from n_r"});
    c.push_back(below("quad_norm", worst_norm, 1e-6, "max |norm - 1|"));

    const int samples = small ? 30 : 100;
    c.push_back(below("gamma_modulus_identities", gamma_modulus_residual(small ? 50 : 200), 1e-11));
    c.push_back(below("gamma_reflection", gamma_reflection_residual(samples, 11), 1e-11));
    c.push_back(below("gamma_recurrence", gamma_recurrence_residual(samples, 12), 1e-12));
    c.push_back(below("kummer_transform", kummer_transform_residual(samples, 13), 1e-10));
    const double poly = kummer_polynomial_residual(small ? 8 : 16);
    c.push_back({"kummer_polynomial", poly, 1e-14, poly >= 0.0 && poly < 1e-14,
                 "-1 means a series did not stop at n + 1 terms"});

    std::vector<CheckRow> field_rows(9);
    const FluxCase cases[] = {FluxCase::CoulombOnly, FluxCase::IntegerFlux, FluxCase::HalfInteger};
    parallel_for(3, opts.jobs, [&](std::size_t i) {
        const ScatteringParams p = make_scattering_params(1.0, 1.0, cases[i]);
        const std::string tag(to_string(cases[i]));
        const RateResult rr = pde_residual_rate(p, 0.1);
        field_rows[3 * i] = {"pde_residual_order_" + tag, rr.rate, 0.2,
                             std::abs(rr.rate - 2.0) <= 0.2, "rate must lie in [1.8, 2.2]"};
        field_rows[3 * i + 1] = {"field_parity_" + tag, field_parity_residual(p), 0.0,
                                 field_parity_residual(p) == 0.0, "exact"};
        field_rows[3 * i + 2] = below("field_boundary_" + tag, field_boundary_residual(p), 1e-12);
    });
    c.insert(c.end(), field_rows.begin(), field_rows.end());
    for (const FluxCase fc : {FluxCase::IntegerFlux, FluxCase::HalfInteger}) {
        const double origin = std::abs(eval_scattering_field(make_scattering_params(1.0, 1.0, fc), 0.0, 0.0));
        c.push_back({"field_origin_" + std::string(to_string(fc)), origin, 0.0, origin == 0.0, "exact"});
    }

    c.push_back(below("coulomb_amplitude_modulus", amplitude_consistency_residual(50, 21, false), 1e-12));
    c.push_back(below("half_amplitude_modulus", amplitude_consistency_residual(50, 21, true), 1e-12));
    c.push_back(below("half_to_coulomb_ratio", half_coulomb_ratio_residual(50, 22), 1e-12));

    double ab = 0.0;
    double classical_c = 0.0;
    double classical_2 = 0.0;
    for (const double theta : {0.3, 1.0, 2.0, kPi, 4.5}) {
        const ScatteringParams half = make_scattering_params(1.0, 1e-8, FluxCase::HalfInteger);
        ab = std::max(ab, std::abs(sigma_half(half, theta) /
                                       limit_ab(FluxCase::HalfInteger, 1.0, theta) -
                                   1.0));
        // mu = kappa = 1, v_c = 1/20: k = mu v_c, beta = kappa / v_c = 20.
        const double v_c = 0.05;
        const ScatteringParams cl = make_scattering_params(v_c, 1.0 / v_c, FluxCase::HalfInteger);
        const double ref = limit_classical(1.0, 1.0, v_c, theta);
        classical_c = std::max(classical_c, std::abs(sigma_coulomb(cl, theta) / ref - 1.0));
        classical_2 = std::max(classical_2, std::abs(sigma_half(cl, theta) / ref - 1.0));
    }
    c.push_back(below("ab_limit_half", ab, 1e-6));
    c.push_back(below("classical_limit_coulomb", classical_c, 1e-8));
    c.push_back(below("classical_limit_half", classical_2, 1e-8));

    const DecayFit fit = stationary_residual_fit(1.0, 1.0, 2.0, false, small ? 9 : 25);
    c.push_back({"stationary_wave_decay", fit.exponent, -1.0, fit.exponent < -1.0,
                 "fitted exponent of the residual over r in [50, 200]"});
    return report;
}

}  // namespace abc2d
