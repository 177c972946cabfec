#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernoulli/complex_ops.hpp"
#include "bernoulli/gamma.hpp"

#include <cmath>

using namespace bernoulli;
using doctest::Approx;

namespace {
double rel_err(const Complex& got, const Complex& want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
}  // namespace

TEST_CASE("principal powers") {
    CHECK(std::abs(cpow_principal({0, 1}, 2) - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(cpow_principal(std::exp(1.0), 1) - Complex(std::exp(1.0), 0)) < 1e-15);
    CHECK(std::abs(cpow_principal({-1, 0}, 0.5) - Complex(0, 1)) < 1e-15);
    CHECK(cpow_principal({0, 0}, {2, 3}) == Complex(0, 0));
    CHECK_THROWS_AS((void)cpow_principal({0, 0}, {-1, 0}), std::domain_error);
    CHECK_THROWS_AS((void)cpow_principal({0, 0}, {0, 2}), std::domain_error);

    // integer exponents equal repeated multiplication
    const Complex bases[] = {{0.7, 1.3}, {-2.25, 0.5}, {3.0, -0.125}};
    for (const Complex& b : bases) {
        Complex p = 1.0;
        for (int m = 1; m <= 12; ++m) {
            p *= b;
            CHECK(rel_err(cpow_principal(b, m), p) < 1e-13);
        }
    }
}

TEST_CASE("sincospi hits half-integers exactly") {
    CHECK(sinpi(3.0) == 0.0);
    CHECK(sinpi(-14.0) == 0.0);
    CHECK(cospi(5.5) == 0.0);
    CHECK(cospi(-0.5) == 0.0);
    CHECK(sinpi(0.5) == 1.0);
    CHECK(cospi(7.0) == -1.0);
    for (double x : {0.123, 1.75, -2.6, 33.2}) {
        CHECK(sinpi(x) == Approx(std::sin(kPi * x)).epsilon(1e-13));
        CHECK(cospi(x) == Approx(std::cos(kPi * x)).epsilon(1e-13));
    }
}

TEST_CASE("gamma point values") {
    CHECK(rel_err(gamma({1, 0}), {1, 0}) < 1e-14);
    CHECK(rel_err(gamma({0.5, 0}), {std::sqrt(kPi), 0}) < 1e-14);
    CHECK(rel_err(gamma({5, 0}), {24, 0}) < 1e-14);
    CHECK_THROWS_AS((void)gamma({0, 0}), std::domain_error);
    CHECK_THROWS_AS((void)gamma({-3, 0}), std::domain_error);
}

TEST_CASE("gamma reflection and recurrence on a grid") {
    const double res[] = {-4.6, -1.25, 0.3, 2.7, 6.5, 14.25};
    const double ims[] = {-8.0, -0.75, 0.0, 0.5, 9.5};
    for (double re : res)
        for (double im : ims) {
            const Complex z{re, im};
            CHECK(rel_err(gamma(z + 1.0), z * gamma(z)) < 1e-12);
            const Complex refl = gamma(z) * gamma(1.0 - z);
            CHECK(rel_err(refl, kPi / sinpi_c(z)) < 1e-10);
        }
    // 12 significant digits out to |z| = 50
    CHECK(rel_err(gamma({26, 0}), {1.5511210043330985984e25, 0}) < 1e-12);
    const Complex g40 = gamma({40.5, 20.0});
    const Complex check = gamma({41.5, 20.0}) / Complex{40.5, 20.0};
    CHECK(rel_err(g40, check) < 1e-12);
}

TEST_CASE("digamma values and identities") {
    CHECK(rel_err(digamma({1, 0}), {-kEulerGamma, 0}) < 1e-13);
    CHECK(rel_err(digamma({2, 0}), {1.0 - kEulerGamma, 0}) < 1e-13);
    // duplication as oracle: psi(1/2) = psi(1) - 2 ln 2
    CHECK(rel_err(digamma({0.5, 0}), digamma({1, 0}) - Complex(2.0 * kLn2, 0)) < 1e-13);
    CHECK_THROWS_AS((void)digamma({-2, 0}), std::domain_error);
    // recurrence on a grid
    for (double re : {-3.3, 0.25, 1.0, 7.5})
        for (double im : {0.0, 2.5, -6.0}) {
            const Complex z{re, im};
            CHECK(std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z) < 1e-12);
        }
    // reflection: psi(3/4) - psi(1/4) = pi
    CHECK(rel_err(digamma({0.75, 0}) - digamma({0.25, 0}), {kPi, 0}) < 1e-13);
}

TEST_CASE("expm1_over is stable near zero") {
    CHECK(std::abs(expm1_over({0, 0}) - Complex(1, 0)) == 0.0);
    CHECK(std::abs(expm1_over({1e-9, 0}) - Complex(1.0 + 0.5e-9, 0)) < 1e-15);
    const Complex z{0.3, -0.2};
    CHECK(std::abs(expm1_over(z) - (std::exp(z) - 1.0) / z) < 1e-15);
}
