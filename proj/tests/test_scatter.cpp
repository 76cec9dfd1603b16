#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abc2d/errors.hpp"
#include "abc2d/scatter.hpp"
#include "abc2d/verify.hpp"

using namespace abc2d;

namespace {

constexpr double kPi = std::numbers::pi;

Errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an abc2d::Error");
    return Errc::invalid_argument;
}

ScatteringParams params(double k, double beta, FluxCase c)
{
    return make_scattering_params(k, beta, c);
}

}  // namespace

TEST_SUITE("scatter") {

TEST_CASE("scattering parameters")
{
    auto p = scattering_params(make_relative_problem(1, 1, 0), 0.5);
    CHECK(p.k == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.beta == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.flux_case == FluxCase::CoulombOnly);
    p = scattering_params(make_relative_problem(1, -1, 2), 0.5);
    CHECK(p.beta == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(p.flux_case == FluxCase::IntegerFlux);
    CHECK(scattering_params(make_relative_problem(1, 1, -0.5), 2.0).flux_case == FluxCase::HalfInteger);
    CHECK(code_of([] { scattering_params(make_relative_problem(1, 1, 0.25), 0.5); }) ==
          Errc::unsupported_flux_case);
    CHECK(code_of([] { scattering_params(make_relative_problem(1, 1, 0), -0.5); }) == Errc::invalid_argument);
    CHECK(code_of([] { params(0.0, 1.0, FluxCase::CoulombOnly); }) == Errc::invalid_argument);
}

TEST_CASE("Coulomb amplitude and cross section")
{
    const ScatteringParams p = params(1, 1, FluxCase::CoulombOnly);
    CHECK(std::norm(amplitude_coulomb(p, kPi)) == doctest::Approx(0.49813603811037497213).epsilon(1e-13));
    CHECK(sigma_coulomb(p, kPi) == doctest::Approx(0.4981360389).epsilon(1e-9));
    CHECK(sigma_coulomb(p, kPi / 2) == doctest::Approx(0.9962720778).epsilon(1e-9));
    CHECK(sigma_coulomb(params(1, 0, FluxCase::CoulombOnly), 1.0) == 0.0);
    CHECK(std::abs(amplitude_coulomb(params(1, 1e-12, FluxCase::CoulombOnly), 1.0)) < 1e-11);
    CHECK(amplitude_coulomb(params(1, 0, FluxCase::CoulombOnly), 1.0) == Complex(0.0));
    for (double d : {0.1, 0.9, 2.5})
        CHECK(std::norm(amplitude_coulomb(p, kPi + d)) ==
              doctest::Approx(std::norm(amplitude_coulomb(p, kPi - d))).epsilon(1e-14));
    for (double beta : {-5.0, -0.2, 0.2, 5.0})
        CHECK(sigma_coulomb(params(1, beta, FluxCase::CoulombOnly), 2.0) > 0.0);
    CHECK(amplitude_consistency_residual(50, 4, false) < 1e-12);
}

TEST_CASE("forward cone")
{
    const ScatteringParams p = params(1, 1, FluxCase::IntegerFlux);
    CHECK(code_of([&] { sigma_coulomb(p, 0.0); }) == Errc::forward_singularity);
    CHECK(code_of([&] { sigma_coulomb(p, 2 * kPi + 1e-4); }) == Errc::forward_singularity);
    CHECK(code_of([&] { amplitude_coulomb(p, -5e-4); }) == Errc::forward_singularity);
    CHECK(code_of([&] { sigma_integer_flux(p, 0.0); }) == Errc::forward_singularity);
    CHECK(code_of([&] { limit_ab(FluxCase::HalfInteger, 1.0, 0.0); }) == Errc::forward_singularity);
    CHECK(code_of([&] { limit_classical(1, 1, 1, 4 * kPi); }) == Errc::forward_singularity);
    CHECK_NOTHROW(sigma_coulomb(p, 2e-3));
}

TEST_CASE("interference term")
{
    const ScatteringParams p = params(1, 1, FluxCase::IntegerFlux);
    // mpmath: -sqrt(tanh pi / pi) cos(delta0 + delta1)
    CHECK(sigma_interference(p, kPi) == doctest::Approx(-0.34231052734203001773).epsilon(1e-13));
    const double delta0 = arg_gamma({0.5, -1.0});
    const double delta1 = arg_gamma({0.0, 1.0});
    CHECK(sigma_interference(p, kPi) ==
          doctest::Approx(-0.563136973737221182 * std::cos(delta0 + delta1)).epsilon(1e-13));

    struct Ref {
        double beta, theta, value;
    };
    // mpmath, k = 1
    const Ref refs[] = {
        {0.3, 0.7, -0.65289344781853391514}, {-2.0, 0.7, 2.2289941213136278763},
        {5.0, 0.7, 3.2835069080974144022},   {0.3, 2.0, -0.14174922888106898429},
        {-2.0, 2.0, -0.93635841901458702226}, {5.0, 2.0, -0.91351223513968535435},
        {0.3, 4.1, -0.12584806281924681107}, {-2.0, 4.1, -0.83811546149723325152},
        {5.0, 4.1, -1.3178577899763144597},
    };
    for (const auto& r : refs) {
        CAPTURE(r.beta);
        CAPTURE(r.theta);
        CHECK(sigma_interference(params(1, r.beta, FluxCase::IntegerFlux), r.theta) ==
              doctest::Approx(r.value).epsilon(1e-12));
    }

    for (double theta : {0.3, 1.1, 2.0, 3.0})
        CHECK(sigma_interference(p, theta) ==
              doctest::Approx(sigma_interference(p, 2 * kPi - theta)).epsilon(1e-12));
    CHECK(sigma_interference(params(1, 0, FluxCase::IntegerFlux), 1.0) == 0.0);
    CHECK(std::abs(sigma_interference(params(1, 1e-9, FluxCase::IntegerFlux), 1.0)) < 1e-8);
    CHECK(code_of([] { sigma_interference(params(1, 1, FluxCase::HalfInteger), 1.0); }) == Errc::wrong_case);
    CHECK(code_of([] { sigma_interference(params(1, 1, FluxCase::CoulombOnly), 1.0); }) == Errc::wrong_case);
}

TEST_CASE("interference term from the outgoing part of the stationary wave")
{
    // psi_st = g e^{i(kr + beta ln 2kr)} / sqrt(r) + incoming, with
    // g = -e^{2 i delta0 - i pi/4} / sqrt(2 pi k). The outgoing cross flux of
    // f_C and g gives 2 Re(conj(f_C) g).
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> lb(std::log(0.05), std::log(8.0));
    std::uniform_real_distribution<double> th(0.05, 2 * kPi - 0.05);
    std::uniform_real_distribution<double> kk(0.2, 3.0);
    for (int i = 0; i < 50; ++i) {
        const double beta = (i % 2 ? -1 : 1) * std::exp(lb(rng));
        const double theta = th(rng);
        const ScatteringParams p = params(kk(rng), beta, FluxCase::IntegerFlux);
        const double delta0 = arg_gamma({0.5, -beta});
        const Complex g = -std::polar(1.0, 2 * delta0 - kPi / 4) / std::sqrt(2 * kPi * p.k);
        const double cross = 2.0 * (std::conj(amplitude_coulomb(p, theta)) * g).real();
        CAPTURE(beta);
        CAPTURE(theta);
        CHECK(sigma_interference(p, theta) == doctest::Approx(cross).epsilon(1e-11).scale(1e-12));
    }
}

TEST_CASE("integer-flux sample")
{
    const ScatteringParams p = params(1.3, 0.8, FluxCase::IntegerFlux);
    for (double theta : {0.2, 1.0, kPi, 5.0}) {
        const CrossSectionSample s = sigma_integer_flux(p, theta);
        CHECK(std::abs(s.sigma_total - s.sigma_coulomb - s.sigma_cross) <= 1e-15 * std::abs(s.sigma_total));
        CHECK(s.sigma_coulomb == sigma_coulomb(p, theta));
        CHECK(s.theta == theta);
    }
    CHECK(code_of([] { sigma_integer_flux(params(1, 1, FluxCase::HalfInteger), 1.0); }) == Errc::wrong_case);
}

TEST_CASE("interference to Coulomb ratio at beta = 5")
{
    // |sigma_x| / sigma_C = 2 |sin(theta/2)| |cos(...)| / sqrt(pi beta tanh(beta pi))
    const ScatteringParams p = params(1, 5, FluxCase::IntegerFlux);
    const double ratio = std::abs(sigma_interference(p, kPi)) / sigma_coulomb(p, kPi);
    CHECK(ratio == doctest::Approx(0.347778206169428).epsilon(1e-12));
    const double bound = 2.0 / std::sqrt(kPi * 5.0 * std::tanh(5.0 * kPi));
    CHECK(bound == doctest::Approx(0.50463).epsilon(1e-4));
    for (double theta = 0.01; theta < 2 * kPi; theta += 0.01)
        CHECK(std::abs(sigma_interference(p, theta)) / sigma_coulomb(p, theta) <=
              bound * std::abs(std::sin(theta / 2)) * (1 + 1e-12));
}

TEST_CASE("half-integer flux")
{
    const ScatteringParams p = params(1, 1, FluxCase::HalfInteger);
    CHECK(sigma_half_flux(p, kPi).sigma_total == doctest::Approx(0.5018709365986606441).epsilon(1e-13));
    CHECK(sigma_half(params(1, 0, FluxCase::HalfInteger), kPi) == doctest::Approx(0.1591549431).epsilon(1e-10));
    CHECK(sigma_half(params(1, 1e-8, FluxCase::HalfInteger), kPi) ==
          doctest::Approx(1 / (2 * kPi)).epsilon(1e-12));
    CHECK(amplitude_consistency_residual(50, 5, true) < 1e-12);
    CHECK(half_coulomb_ratio_residual(50, 6) < 1e-12);
    // the amplitude changes sign on the second sheet
    for (double theta : {0.5, 2.0, 3.0})
        CHECK(std::abs(amplitude_half_flux(p, theta + 2 * kPi) + amplitude_half_flux(p, theta)) <
              1e-13 * std::abs(amplitude_half_flux(p, theta)));
    for (double beta : {0.01, 0.5, 3.0, 12.0})
        for (double theta = 0.05; theta < 2 * kPi; theta += 0.1) {
            const CrossSectionSample s = sigma_half_flux(params(0.9, beta, FluxCase::HalfInteger), theta);
            CHECK(s.sigma_total >= s.sigma_coulomb);
            CHECK(s.sigma_cross == 0.0);
        }
    CHECK(code_of([] { sigma_half_flux(params(1, 1, FluxCase::IntegerFlux), 1.0); }) == Errc::wrong_case);
}

TEST_CASE("limits")
{
    CHECK(limit_ab(FluxCase::IntegerFlux, 1.0, 2.0) == 0.0);
    CHECK(limit_ab(FluxCase::HalfInteger, 1.0, kPi) == doctest::Approx(0.1591549431).epsilon(1e-10));
    CHECK(limit_ab(FluxCase::HalfInteger, 2.0, kPi / 2) == doctest::Approx(0.1591549431).epsilon(1e-10));
    CHECK(limit_classical(1, 1, 1, kPi) == 0.5);
    CHECK(limit_classical(-1, 1, 1, kPi) == 0.5);
    // tanh and coth approach 1 as 1 -+ 2 e^{-2 pi beta}
    for (double beta : {1.0, 2.0, 4.0}) {
        const double v_c = 1.0 / beta;  // mu = kappa = 1
        const ScatteringParams p = params(v_c, beta, FluxCase::HalfInteger);
        const double ref = limit_classical(1, 1, v_c, 2.0);
        const double gap = 2.0 * std::exp(-2.0 * kPi * beta) * 1.01;
        CHECK(std::abs(sigma_coulomb(p, 2.0) / ref - 1.0) < gap);
        CHECK(std::abs(sigma_half(p, 2.0) / ref - 1.0) < gap);
    }
}

TEST_CASE("parabolic coordinates")
{
    const Parabolic a = to_parabolic(2.0, 0.0);
    CHECK(a.xi == 2.0);
    CHECK(a.eta == 0.0);
    const Cartesian c = from_parabolic(1.0, 1.0);
    CHECK(c.x == 0.0);
    CHECK(c.y == 1.0);
    const Cartesian m = from_parabolic(-1.0, -1.0);
    CHECK(m.x == c.x);
    CHECK(m.y == c.y);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ur(0.0, 50.0);
    std::uniform_real_distribution<double> ut(0.0, 4 * kPi);
    for (int i = 0; i < 200; ++i) {
        const double r = ur(rng), theta = ut(rng);
        const Parabolic p = to_parabolic(r, theta);
        const Cartesian q = from_parabolic(p.xi, p.eta);
        CHECK(std::abs(q.x - r * std::cos(theta)) < 1e-13 * std::max(1.0, r));
        CHECK(std::abs(q.y - r * std::sin(theta)) < 1e-13 * std::max(1.0, r));
    }
}

TEST_CASE("scattering fields")
{
    const ScatteringParams coul = params(1, 1, FluxCase::CoulombOnly);
    const ScatteringParams integ = params(1, 1, FluxCase::IntegerFlux);
    const ScatteringParams half = params(1, 1, FluxCase::HalfInteger);

    // mpmath at (xi, eta) = (1.3, 0.8)
    CHECK(std::abs(eval_scattering_field(coul, 1.3, 0.8) -
                   Complex(0.28826784766596277819, -0.017554908284814346656)) < 1e-13);
    CHECK(std::abs(eval_scattering_field(integ, 1.3, 0.8) -
                   Complex(0.54599072413033324388, 0.34668155623935137118)) < 1e-13);
    CHECK(std::abs(eval_scattering_field(half, 1.3, 0.8) -
                   Complex(1.3494299581834726058, 0.31474122339517655686)) < 1e-13);

    CHECK(eval_scattering_field(integ, 0, 0) == Complex(0.0));
    CHECK(eval_scattering_field(half, 0, 0) == Complex(0.0));
    for (double xi : {-3.0, 0.5, 7.0})
        CHECK(eval_scattering_field(half, xi, 0.0) == Complex(0.0));
    const Complex c1 = eval_scattering_field(coul, 0, 0);
    CHECK(std::abs(c1 - Complex(0.8160915750621289313, 1.1533718469484867414)) < 1e-14);
    CHECK(std::abs(c1) == doctest::Approx(std::sqrt(std::exp(kPi) / std::cosh(kPi))).epsilon(1e-14));

    for (const auto& p : {coul, integ, half}) {
        CHECK(field_parity_residual(p) == 0.0);
        CHECK(field_boundary_residual(p) < 1e-12);
    }
}

TEST_CASE("field equation residual is second order")
{
    for (FluxCase fc : {FluxCase::CoulombOnly, FluxCase::IntegerFlux, FluxCase::HalfInteger})
        for (double beta : {-0.7, 1.0}) {
            const RateResult r = pde_residual_rate(params(1.2, beta, fc), 0.1);
            CAPTURE(to_string(fc));
            CHECK(r.rate == doctest::Approx(2.0).epsilon(0.1));
        }
}

TEST_CASE("stationary wave")
{
    const ScatteringParams p = params(1, 1, FluxCase::IntegerFlux);
    const double delta0 = arg_gamma({0.5, -1.0});
    for (double r = 0.5; r < 300; r *= 1.13)
        CHECK(std::abs(stationary_wave(p, r)) * std::sqrt(r) <= std::sqrt(2 / kPi) * (1 + 1e-15));
    // a zero of the cosine, found by Newton in r
    double r = 20.0;
    for (int i = 0; i < 50; ++i) {
        const double phase = r + std::log(2 * r) + delta0 - kPi / 4;
        const double target = kPi / 2 + kPi * std::round((phase - kPi / 2) / kPi);
        r -= (phase - target) / (1 + 1 / r);
    }
    CHECK(std::abs(stationary_wave(p, r)) < 1e-14);
    CHECK(code_of([] { stationary_wave(params(1, 1, FluxCase::CoulombOnly), 1.0); }) == Errc::wrong_case);

    // at r = 100 the decomposition residual is already O(r^{-3/2})
    const DecayFit fit = stationary_residual_fit(1, 1, 2.0, false, 25);
    CHECK(fit.exponent < -1.0);
    CHECK(fit.residual_last < 1e-3);
}

TEST_CASE("leading asymptotic waves")
{
    // the field approaches incident + scattered as r grows, at rate 1/r
    for (FluxCase fc : {FluxCase::CoulombOnly, FluxCase::HalfInteger}) {
        const ScatteringParams p = params(1, 0.6, fc);
        const double theta = fc == FluxCase::HalfInteger ? 2.0 + 2 * kPi : 2.0;
        double prev = 1e9;
        for (double r : {100.0, 400.0, 1600.0}) {
            const Parabolic q = to_parabolic(r, theta);
            const double gap = std::abs(eval_scattering_field(p, q.xi, q.eta) - incident_wave(p, r, theta) -
                                        scattered_wave(p, r, theta));
            CHECK(gap < 3.0 / r);
            CHECK(gap < prev);
            prev = gap;
        }
    }
}

TEST_CASE("probability current")
{
    const double k = 1.7;
    const FieldGrid plane =
        sample_field([&](double x, double) { return std::polar(1.0, k * x); }, -1, -1, 1e-4, 1e-4, 5, 5);
    const auto j = current_field(plane, 2, 2, 2.0);
    CHECK(j[0] == doctest::Approx(k / 2.0).epsilon(1e-8));
    CHECK(std::abs(j[1]) < 1e-12);

    const FieldGrid standing =
        sample_field([](double x, double y) { return Complex(std::cos(x) * std::sin(2 * y)); }, 0, 0, 0.1, 0.1, 4, 4);
    const auto js = current_field(standing, 1, 2);
    CHECK(js[0] == 0.0);
    CHECK(js[1] == 0.0);
    CHECK(code_of([&] { current_field(standing, 0, 1); }) == Errc::grid_boundary);
    CHECK(code_of([&] { current_field(standing, 1, 3); }) == Errc::grid_boundary);
    CHECK(code_of([&] { current_field(standing, 9, 1); }) == Errc::grid_boundary);

    // far upstream the Coulomb wave flows along +x
    const ScatteringParams p = params(1, 1, FluxCase::CoulombOnly);
    const FieldGrid up = sample_field([&](double x, double y) { return eval_scattering_field_xy(p, x, y); },
                                      -200.01, 0.49, 0.01, 0.01, 3, 3);
    const auto ju = current_field(up, 1, 1);
    CHECK(std::abs(std::atan2(ju[1], ju[0])) < 1e-2);
}

}
