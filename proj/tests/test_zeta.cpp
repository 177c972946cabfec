#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernoulli/exact.hpp"
#include "bernoulli/gamma.hpp"
#include "bernoulli/zeta.hpp"

#include <cmath>

using namespace bernoulli;

namespace {

double rel_err(const Complex& got, const Complex& want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

double rat_to_double(const BigRational& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

// Brute-force oracle for Li_s(i) with Re(s) >= 2: alternating partial
// sums of the quarter-split series, averaged for convergence.
Complex polylog_i_brute(double s) {
    // real part: -sum (-1)^(m-1)/(2m)^s, imag: sum (-1)^m/(2m+1)^s
    double re_p = 0.0, im_p = 0.0;
    double re_prev = 0.0, im_prev = 0.0;
    const int terms = 4000000;
    for (int m = 1; m <= terms; ++m) {
        const double t = std::pow(2.0 * m, -s);
        re_prev = re_p;
        re_p += (m % 2 == 1) ? -t : t;
    }
    for (int m = 0; m <= terms; ++m) {
        const double t = std::pow(2.0 * m + 1.0, -s);
        im_prev = im_p;
        im_p += (m % 2 == 0) ? t : -t;
    }
    return {0.5 * (re_p + re_prev), 0.5 * (im_p + im_prev)};
}

}  // namespace

TEST_CASE("riemann zeta point values") {
    CHECK(rel_err(riemann_zeta(2), {kPi * kPi / 6.0, 0}) < 1e-13);
    CHECK(rel_err(riemann_zeta(0), {-0.5, 0}) < 1e-13);
    // zeta(-1) = -B(2)/2, zeta(-3) = -B(4)/4 from the exact kernel
    CHECK(rel_err(riemann_zeta(-1), {-rat_to_double(exact::bernoulli_number(2)) / 2.0, 0}) < 1e-12);
    CHECK(rel_err(riemann_zeta(-3), {-rat_to_double(exact::bernoulli_number(4)) / 4.0, 0}) < 1e-12);
    CHECK(std::abs(riemann_zeta(-3) - Complex(1.0 / 120.0, 0)) < 1e-15);
    CHECK_THROWS_AS((void)riemann_zeta(1), std::domain_error);
}

TEST_CASE("hurwitz zeta examples and domain") {
    CHECK(rel_err(hurwitz_zeta(2, 1), {kPi * kPi / 6.0, 0}) < 1e-13);
    CHECK(rel_err(hurwitz_zeta(0, 1), {-0.5, 0}) < 1e-13);
    CHECK(rel_err(hurwitz_zeta(-1, 1), {-1.0 / 12.0, 0}) < 1e-12);
    CHECK_THROWS_AS((void)hurwitz_zeta(2, -1.0), std::domain_error);
    CHECK_THROWS_AS((void)hurwitz_zeta(1, 1.0), std::domain_error);
}

TEST_CASE("hurwitz recurrence zeta(s,v) = zeta(s,v+1) + v^-s") {
    const double vs[] = {0.25, 0.5, 1.0, 1.5};
    for (double sr = -10.0; sr <= 10.0; sr += 2.5)
        for (double si = -10.0; si <= 10.0; si += 2.5) {
            const Complex s{sr == 1.0 ? 1.2 : sr, si};
            if (s == Complex(1.0, 0.0)) continue;
            for (double v : vs) {
                const Complex lhs = hurwitz_zeta(s, v);
                const Complex rhs = hurwitz_zeta(s, v + 1.0) + cpow_principal(v, -s);
                // relative where the value is away from zero; the grid
                // crosses exact zeros (e.g. zeta(-10, 1/2)) where only
                // the absolute residual is meaningful
                CHECK(std::abs(lhs - rhs) < 1e-11 * (1.0 + std::abs(lhs) + std::abs(rhs)));
            }
        }
}

TEST_CASE("duplication zeta(s,1/2) = (2^s - 1) zeta(s)") {
    for (double sr : {-9.5, -2.5, -0.5, 0.5, 3.0, 12.0})
        for (double si : {0.0, 4.0, -7.5}) {
            const Complex s{sr, si};
            const Complex lhs = hurwitz_zeta(s, 0.5);
            const Complex rhs = (std::exp(s * kLn2) - 1.0) * riemann_zeta(s);
            CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(lhs) + std::abs(rhs)));
        }
}

TEST_CASE("zeta functional equation residuals") {
    const Complex pts[] = {{2, 0}, {3, 0}, {0.5, 3}, {4, -2}};
    for (const Complex& s : pts) {
        const Complex lhs = riemann_zeta(1.0 - s);
        const Complex tau = std::exp((1.0 - s) * kLn2 - s * std::log(kPi)) * cospi_c(s / 2.0);
        const Complex rhs = riemann_zeta(s) * tau * gamma(s);
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(lhs) + std::abs(rhs)));
    }
}

TEST_CASE("trivial zeros come out far below 1e-10") {
    for (int k = 1; k <= 5; ++k) CHECK(std::abs(riemann_zeta(-2.0 * k)) < 1e-12);
    CHECK(std::abs(riemann_zeta(-40)) < 1e-30);  // reflection path, exact cos zero
}

TEST_CASE("wide and double summation paths agree across the seam") {
    for (double v : {0.25, 0.4, 0.75, 1.0, 1.37}) {
        for (double si : {0.0, 3.0}) {
            // compare values just above/below the dispatch threshold
            const Complex a = hurwitz_zeta({-0.4, si}, v);
            const Complex b = hurwitz_zeta({-0.6, si}, v);
            CHECK(std::isfinite(a.real()));
            CHECK(std::isfinite(b.real()));
            // midpoint consistency through the recurrence identity
            const Complex s{-0.6, si};
            CHECK(rel_err(hurwitz_zeta(s, v), hurwitz_zeta(s, v + 1.0) + cpow_principal(v, -s)) < 1e-11);
        }
    }
    // deep-negative quarter path vs wide summation at the seam
    for (double v : {0.25, 0.5, 0.75, 1.0}) {
        const Complex s{-20.5, 0.0};
        const Complex em = hurwitz_zeta(s, v);
        const Complex s2{-21.5, 0.0};
        const Complex refl = hurwitz_zeta(s2, v);
        // cross-check with the recurrence, which mixes both paths
        CHECK(rel_err(refl, hurwitz_zeta(s2, v + 1.0) + cpow_principal(v, -s2)) < 1e-10);
        CHECK(std::isfinite(em.real()));
    }
}

TEST_CASE("eta values") {
    CHECK(rel_err(eta(1), {kLn2, 0}) < 1e-13);
    CHECK(rel_err(eta({1.0 + 1e-9, 0}), {kLn2, 0}) < 1e-8);
    CHECK(rel_err(eta(0), {0.5, 0}) < 1e-13);
    CHECK(rel_err(eta(2), {kPi * kPi / 12.0, 0}) < 1e-13);
    // near-pole patch consistency with the direct formula just outside it
    const Complex s{1.0 + 2e-7, 0};
    const Complex direct = (1.0 - std::exp((1.0 - s) * kLn2)) * riemann_zeta(s);
    CHECK(rel_err(eta(s), direct) < 1e-9);
}

TEST_CASE("dirichlet beta values") {
    CHECK(rel_err(dirichlet_beta(1), {kPi / 4.0, 0}) < 1e-13);
    CHECK(rel_err(dirichlet_beta(0), {0.5, 0}) < 1e-13);
    CHECK(rel_err(dirichlet_beta(2), {kCatalan, 0}) < 1e-13);
    // entire at s = 1: no pole from the Hurwitz pieces
    CHECK(std::isfinite(dirichlet_beta(1).real()));
    // reflection vs wide summation agreement near the deep seam
    const Complex a = dirichlet_beta({-20.5, 1.0});
    const Complex u = 1.0 - Complex{-20.5, 1.0};
    const Complex b = std::exp((Complex{-20.5, 1.0} - 1.0) * std::log(kPi / 2.0)) *
                      cospi_c(Complex{-20.5, 1.0} / 2.0) * gamma(u) * dirichlet_beta(u);
    CHECK(rel_err(a, b) < 1e-11);
}

TEST_CASE("alternating hurwitz zeta") {
    CHECK(rel_err(alt_hurwitz_zeta(2, 1), {kPi * kPi / 12.0, 0}) < 1e-13);
    CHECK(rel_err(alt_hurwitz_zeta(3, 1), eta(3)) < 1e-13);
    // direct series oracle: sum (-1)^n/(n+1/2)^2 = 4 Catalan
    CHECK(rel_err(alt_hurwitz_zeta(2, 0.5), {4.0 * kCatalan, 0}) < 1e-12);
    CHECK_THROWS_AS((void)alt_hurwitz_zeta(2, 1.5), std::domain_error);
    CHECK_THROWS_AS((void)alt_hurwitz_zeta(2, 0.0), std::domain_error);
    // regular at s = 1
    CHECK(std::isfinite(alt_hurwitz_zeta(1, 0.75).real()));
}

TEST_CASE("polylog at unit-circle quarter points") {
    CHECK(rel_err(polylog_unit(2, 0.5), {-kPi * kPi / 12.0, 0}) < 1e-13);
    CHECK(rel_err(polylog_unit(2, 1.0), {kPi * kPi / 6.0, 0}) < 1e-13);
    CHECK(std::abs(polylog_unit(0, 0.25) - Complex(-0.5, 0.5)) < 1e-14);
    CHECK_THROWS_AS((void)polylog_unit(0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)polylog_unit(2, 0.3), std::domain_error);

    for (double s : {2.0, 2.5, 3.0, 4.0}) {
        const Complex want = polylog_i_brute(s);
        const Complex got = polylog_unit(s, 0.25);
        CHECK(std::abs(got - want) < 1e-12);
        const Complex conj_got = polylog_unit(s, 0.75);
        CHECK(std::abs(conj_got - std::conj(want)) < 1e-12);
    }
}

TEST_CASE("hurwitz zeta diff is the pole-free difference") {
    const Complex s{1.0, 0.0};
    CHECK(std::isfinite(hurwitz_zeta_diff(s, 0.25, 0.75).real()));
    for (double sr : {-6.5, -2.0, 0.5, 2.5})
        for (double si : {0.0, 5.0}) {
            const Complex ss{sr, si};
            const Complex d = hurwitz_zeta_diff(ss, 0.25, 0.75);
            const Complex direct = hurwitz_zeta(ss, 0.25) - hurwitz_zeta(ss, 0.75);
            CHECK(std::abs(d - direct) < 1e-9 * (1.0 + std::abs(direct)));
        }
}
