#include <doctest.h>

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "abc2d/bound.hpp"
#include "abc2d/errors.hpp"
#include "abc2d/oracle.hpp"

using namespace abc2d;

namespace {

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

RelativeProblem unit(double alpha)
{
    return make_relative_problem(1.0, 1.0, alpha);
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("shooting eigenvalues")
{
    CHECK(shoot_radial_eigenvalue(unit(0.0), 0, 0).energy == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(shoot_radial_eigenvalue(unit(0.5), 0, 0).energy == doctest::Approx(-0.5).epsilon(1e-6));
    CHECK(shoot_radial_eigenvalue(unit(0.25), -1, 1).energy ==
          doctest::Approx(-1.0 / (2.0 * 2.25 * 2.25)).epsilon(1e-6));
    CHECK(shoot_radial_eigenvalue(make_relative_problem(2.5, 0.7, 1.3), 2, 3).energy ==
          doctest::Approx(energy({3, 2}, make_relative_problem(2.5, 0.7, 1.3))).epsilon(1e-6));
}

TEST_CASE("shooting agrees with the closed form and counts nodes exactly")
{
    for (double nu : {0.0, 0.25, 0.5, 0.75}) {
        const RelativeProblem p = unit(nu);
        for (int n_r = 0; n_r <= 3; ++n_r)
            for (int m = -3 + n_r; m <= 3 - n_r; ++m) {
                CAPTURE(nu);
                CAPTURE(n_r);
                CAPTURE(m);
                const ShootingResult r = shoot_radial_eigenvalue(p, m, n_r);
                const double e = energy({n_r, m}, p);
                CHECK(std::abs(r.energy - e) / std::abs(e) < 1e-6);
                CHECK(r.nodes == n_r);
            }
    }
}

TEST_CASE("node counting is monotone in E")
{
    const RelativeProblem p = unit(0.25);
    int prev = 0;
    for (double e = -3.0; e < -0.02; e *= 0.97) {
        const int n = count_nodes(p, 1, e);
        CHECK(n >= prev);
        prev = n;
    }
    CHECK(prev >= 3);
}

TEST_CASE("shooting errors")
{
    CHECK(code_of([] { shoot_radial_eigenvalue(make_relative_problem(1, -1, 0), 0, 0); }) ==
          Errc::no_bound_states);
    ShootingConfig bad;
    bad.r_start = 100.0;
    bad.r_max = 1e-3;
    CHECK(code_of([&] { shoot_radial_eigenvalue(unit(0.0), 0, 0, bad); }) == Errc::invalid_argument);
    ShootingConfig coarse;
    coarse.ode_tol = 1e-300;
    CHECK(code_of([&] { count_nodes(unit(0.0), 0, -2.0, coarse); }) == Errc::stiffness_failure);
}

TEST_CASE("shooting path shares no code with the closed form")
{
    const std::string src = slurp(std::string(ABC2D_SOURCE_DIR) + "/src/shooting.cpp");
    const std::string hdr = slurp(std::string(ABC2D_SOURCE_DIR) + "/include/abc2d/shooting.hpp");
    REQUIRE_FALSE(src.empty());
    REQUIRE_FALSE(hdr.empty());
    const std::regex include_re(R"(#include\s*[<"]([^>"]+)[>"])");
    for (const std::string* text : {&src, &hdr})
        for (std::sregex_iterator it(text->begin(), text->end(), include_re), end; it != end; ++it) {
            const std::string inc = (*it)[1];
            CAPTURE(inc);
            CHECK(inc != "abc2d/specfn.hpp");
            CHECK(inc != "abc2d/bound.hpp");
            CHECK(inc != "abc2d/oracle.hpp");
            CHECK(inc != "abc2d/quadrature.hpp");
        }
    CHECK(src.find("kummer") == std::string::npos);
}

TEST_CASE("quadrature norm")
{
    CHECK(quad_norm({0, 0}, unit(0.0)) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(quad_norm({0, 0}, unit(0.5)) == doctest::Approx(1.0).epsilon(1e-6));
    for (double nu : {0.0, 0.25, 0.5, 0.75})
        for (int n_r = 0; n_r <= 4; ++n_r)
            for (int m = -(4 - n_r); m <= 4 - n_r; ++m) {
                const RelativeProblem p = make_relative_problem(0.8, 1.9, nu + 2.0);
                if (!is_acceptable({n_r, m}, p.m0, p.nu))
                    continue;
                CAPTURE(nu);
                CAPTURE(n_r);
                CAPTURE(m);
                CHECK(std::abs(quad_norm({n_r, m}, p) - 1.0) < 1e-6);
            }
}

TEST_CASE("quadrature scales quadratically")
{
    const RelativeProblem p = unit(0.0);
    const double doubled = integrate_density(
        [&](double r) { return 2.0 * eval_bound_wavefunction({0, 0}, p, r, 0.0); }, 0.25);
    CHECK(doubled == doctest::Approx(4.0).epsilon(1e-6));
    // Gaussian: 2 pi int e^{-r^2} r dr = pi
    CHECK(integrate_density([](double r) { return std::exp(-0.5 * r * r); }, 1.0) ==
          doctest::Approx(M_PI).epsilon(1e-10));
}

TEST_CASE("quadrature failure")
{
    // |psi|^2 r ~ 1/r is not integrable.
    CHECK(code_of([] { integrate_density([](double r) { return 1.0 / (1.0 + r); }, 1.0); }) ==
          Errc::quadrature_failure);
}

}
