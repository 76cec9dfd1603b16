#include <algorithm>
#include <cmath>
#include <limits>

#include "abc2d/errors.hpp"
#include "abc2d/specfn.hpp"
#include "double_double.hpp"

namespace abc2d {

namespace {

constexpr int kSeriesCap = 500;
constexpr double kSeriesTol = 1e-16;
constexpr double kExtendedTol = 1e-18;
constexpr double kAsymptoticRadius = 40.0;
constexpr int kAsymptoticCap = 200;
constexpr double kAsymptoticTol = 1e-17;
// Largest term / |sum| above which the double sum is re-run in double-double.
constexpr double kCancellationLimit = 64.0;

bool is_nonpositive_integer(Complex z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool is_finite(Complex z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// |(a + n + 1) z| / (|b + n + 1| (n + 2)): size of the next term relative to
// the current one.
double next_ratio(Complex a, Complex b, Complex z, int n)
{
    const double np1 = static_cast<double>(n + 1);
    return std::abs((a + np1) * z) / (std::abs(b + np1) * (np1 + 1.0));
}

struct DoubleSum {
    detail::SeriesSum sum;
    double max_term = 0.0;
};

DoubleSum series_double(Complex a, Complex b, Complex z)
{
    const bool polynomial = is_nonpositive_integer(a);
    Complex term = 1.0;
    Complex sum = 1.0;
    double max_term = 1.0;
    int terms = 1;
    for (int n = 0; n < kSeriesCap; ++n) {
        const Complex an = a + static_cast<double>(n);
        if (an == 0.0)
            return {{sum, terms, false}, max_term};  // terminated polynomial
        term *= an / (b + static_cast<double>(n)) * z / static_cast<double>(n + 1);
        sum += term;
        ++terms;
        const double t = std::abs(term);
        max_term = std::max(max_term, t);
        if (!polynomial && t <= kSeriesTol * std::abs(sum) && next_ratio(a, b, z, n) < 0.5)
            return {{sum, terms, false}, max_term};
    }
    throw Error(Errc::no_convergence, "kummer_m: Taylor series did not converge within 500 terms");
}

detail::SeriesSum series_extended(Complex a, Complex b, Complex z)
{
    using detail::CDD;
    using detail::DD;
    const CDD ca(a);
    const CDD cb(b);
    const CDD cz(z);
    const bool polynomial = is_nonpositive_integer(a);
    CDD term(DD(1.0), DD(0.0));
    CDD sum = term;
    int terms = 1;
    for (int n = 0; n < kSeriesCap; ++n) {
        const DD dn(static_cast<double>(n));
        const CDD an(ca.re + dn, ca.im);
        if (an.re.hi == 0.0 && an.im.hi == 0.0)
            return {sum.to_complex(), terms, true};
        const CDD bn(cb.re + dn, cb.im);
        const CDD den = bn * CDD(DD(static_cast<double>(n + 1)), DD(0.0));
        term = (term * an * cz) / den;
        sum = sum + term;
        ++terms;
        if (!polynomial && term.abs_approx() <= kExtendedTol * sum.abs_approx() &&
            next_ratio(a, b, z, n) < 0.5)
            return {sum.to_complex(), terms, true};
    }
    throw Error(Errc::no_convergence, "kummer_m: extended series did not converge within 500 terms");
}

// sum_n (p)_n (q)_n / n! * w^n, truncated at its smallest term.
Complex asymptotic_sum(Complex p, Complex q, Complex w)
{
    Complex term = 1.0;
    Complex sum = 1.0;
    double previous = std::numeric_limits<double>::infinity();
    for (int n = 0; n < kAsymptoticCap; ++n) {
        const double dn = static_cast<double>(n);
        term *= (p + dn) * (q + dn) / (dn + 1.0) * w;
        const double t = std::abs(term);
        if (t == 0.0)
            break;
        if (t > previous)
            break;
        sum += term;
        if (t <= kAsymptoticTol * std::abs(sum))
            break;
        previous = t;
    }
    return sum;
}

Complex kummer_nonnegative(Complex a, Complex b, Complex z)
{
    if (std::abs(z) > kAsymptoticRadius)
        return detail::kummer_asymptotic(a, b, z);
    return detail::kummer_series(a, b, z).value;
}

}  // namespace

namespace detail {

SeriesSum kummer_series(Complex a, Complex b, Complex z)
{
    const DoubleSum d = series_double(a, b, z);
    if (d.max_term <= kCancellationLimit * std::abs(d.sum.value))
        return d.sum;
    return series_extended(a, b, z);
}

Complex kummer_asymptotic(Complex a, Complex b, Complex z)
{
    // Two-sector form: the algebraic part carries (-z)^{-a} on the principal
    // branch, which selects the correct Stokes sector for Re z >= 0.
    const Complex ln_gb = ln_gamma(b);
    const Complex log_z = std::log(z);
    const Complex log_mz = std::log(-z);

    Complex result = 0.0;
    if (!is_nonpositive_integer(b - a)) {
        const Complex pre = std::exp(ln_gb - ln_gamma(b - a) - a * log_mz);
        result += pre * asymptotic_sum(a, a - b + 1.0, -1.0 / z);
    }
    if (!is_nonpositive_integer(a)) {
        const Complex pre = std::exp(ln_gb - ln_gamma(a) + z + (a - b) * log_z);
        result += pre * asymptotic_sum(b - a, 1.0 - a, 1.0 / z);
    }
    return result;
}

}  // namespace detail

Complex kummer_m(Complex a, Complex b, Complex z)
{
    if (!is_finite(a) || !is_finite(b) || !is_finite(z))
        throw Error(Errc::invalid_argument, "kummer_m: non-finite argument");
    if (is_nonpositive_integer(b))
        throw Error(Errc::parameter_pole, "kummer_m: b is a non-positive integer");
    if (z == 0.0)
        return 1.0;

    if (is_nonpositive_integer(a))
        return detail::kummer_series(a, b, z).value;
    if (is_nonpositive_integer(b - a))
        return std::exp(z) * detail::kummer_series(b - a, b, -z).value;

    if (z.real() < 0.0)
        return std::exp(z) * kummer_nonnegative(b - a, b, -z);
    return kummer_nonnegative(a, b, z);
}

}  // namespace abc2d
