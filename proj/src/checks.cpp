#include "bernoulli/checks.hpp"

#include "bernoulli/exact.hpp"
#include "bernoulli/family.hpp"
#include "bernoulli/gamma.hpp"
#include "bernoulli/reference_tables.hpp"
#include "bernoulli/zeta.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bernoulli::checks {

namespace {

double rat_to_double(const BigRational& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

struct Suite {
    std::vector<CheckResult> results;

    void add(const std::string& name, double residual, double tolerance) {
        results.push_back({name, residual, tolerance, residual <= tolerance});
    }
    void add_exact(const std::string& name, bool ok) {
        results.push_back({name, ok ? 0.0 : 1.0, 0.5, ok});
    }
};

double norm_resid(const Complex& got, const Complex& want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

RationalPolynomial poly_from_strings(const std::string_view* data, std::size_t n) {
    std::vector<BigRational> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(std::string(data[i]));
    return RationalPolynomial(std::move(v));
}

std::vector<CheckResult> suite_routes() {
    Suite s;

    const Complex grid_s[] = {{-0.5, 0}, {2, 0}, {3.5, 0}, {2, 2}};
    const double grid_v[] = {0.5, 0.75, 1.0, 1.5};
    double worst = 0.0;
    for (const Complex& ss : grid_s)
        for (double v : grid_v)
            worst = std::max(worst, norm_resid(bernoulli_fn_jensen(ss, v), bernoulli_gen(ss, v)));
    s.add("bernoulli-fn zeta vs jensen on the route grid", worst, 1e-9);

    worst = 0.0;
    for (const Complex& ss : grid_s)
        for (double v : grid_v) {
            const auto h = hasse_bernoulli(ss, v, 400);
            const double err = std::abs(h.value - bernoulli_gen(ss, v));
            worst = std::max(worst, err / h.tail_estimate);
        }
    s.add("hasse route within its reported tail estimate", worst, 1.0);

    worst = 0.0;
    for (double sr : {-0.5, 0.0, 2.0, 2.5, 4.0})
        worst = std::max(worst, norm_resid(central_bernoulli_jensen(sr), central_bernoulli(sr)));
    s.add("central-bernoulli zeta vs jensen", worst, 1e-9);

    worst = 0.0;
    for (int n : {0, 2, 6, 10, 12}) {
        const double want = static_cast<double>(exact::euler_number(static_cast<unsigned>(n)));
        worst = std::max(worst, std::fabs(euler_secant_jensen(n) - want) / std::max(1.0, std::fabs(want)));
    }
    s.add("euler-secant jensen integral vs exact integers", worst, 1e-9);

    worst = 0.0;
    for (double sr : {0.0, 1.0, 2.0, 3.0, 0.5})
        worst = std::max(worst, norm_resid(extended_euler_jensen(sr), extended_euler(sr)));
    s.add("extended-euler jensen vs zeta route", worst, 1e-8);

    worst = 0.0;
    for (double sr : {-1.0, 0.0, 0.5, 2.0, 3.5})
        worst = std::max(worst, norm_resid(xi_jensen(sr), xi_fn(sr)));
    s.add("xi jensen vs gamma-zeta route", worst, 1e-8);

    worst = 0.0;
    for (double sr : {-1.5, 0.5, 2.5})
        worst = std::max(worst, norm_resid(bernoulli_fn_series(sr).value, bernoulli_fn(sr)));
    s.add("taylor-series route vs zeta route", worst, 1e-9);

    worst = 0.0;
    for (int n = 2; n <= 6; ++n)
        for (double v : {0.25, 0.5, 0.75, 1.0})
            worst = std::max(worst, norm_resid(hurwitz_bernoulli(n, v), bernoulli_gen(n, v)));
    s.add("hurwitz-bernoulli route vs zeta route", worst, 1e-10);

    worst = 0.0;
    for (int n = 0; n <= 10; ++n)
        worst = std::max(worst,
                         std::fabs(bernoulli_constant_general(n, 1.0) - bernoulli_constant(n)));
    s.add("general-index constants vs sigma integrals", worst, 1e-12);

    return s.results;
}

std::vector<CheckResult> suite_tables() {
    Suite s;

    double worst_lo = 0.0, worst_hi = 0.0;
    for (int n = 0; n <= 20; ++n) {
        const double res = std::fabs(bernoulli_constant(n) - reference::kBeta[n]) /
                           std::max(1.0, std::fabs(reference::kBeta[n]));
        (n <= 14 ? worst_lo : worst_hi) = std::max(n <= 14 ? worst_lo : worst_hi, res);
    }
    s.add("bernoulli constants n = 0..14 vs appendix", worst_lo, 1e-11);
    s.add("bernoulli constants n = 15..20 vs appendix", worst_hi, 1e-9);

    double worst = 0.0;
    for (const auto& row : reference::kBetaOfR)
        worst = std::max(worst, std::fabs(bernoulli_constant_general(row.r, 1.0) - row.value) /
                                    std::max(1.0, std::fabs(row.value)));
    s.add("rational-index constants vs Table 1", worst, 1e-10);

    // b-column of the appendix: b_n = beta_n / n!
    double fact = 1.0;
    worst = 0.0;
    const double b_col[] = {1.0, -0.577215664901532860606512, 0.0728158454836767248605864,
                            0.00484518159643615924226519, -0.000342305736717224311026674};
    for (int n = 0; n <= 4; ++n) {
        if (n > 0) fact *= n;
        worst = std::max(worst, std::fabs(bernoulli_constant(n) / fact - b_col[n]));
    }
    s.add("appendix b-column b_n = beta_n/n!", worst, 1e-12);

    bool ok = true;
    for (unsigned n = 0; n <= 30; ++n) {
        ok = ok && exact::seki_number(n) == BigRational(std::string(reference::kSeki[n]));
        ok = ok && exact::euler_zeta_number(n) == BigRational(std::string(reference::kEulerZeta[n]));
    }
    s.add_exact("seki and euler-zeta table rows 0..30", ok);

    ok = true;
    for (unsigned n = 0; n < reference::kGenocchi.size(); ++n)
        ok = ok && exact::genocchi_number(n) == reference::kGenocchi[n];
    for (unsigned n = 0; n < reference::kEuler.size(); ++n)
        ok = ok && exact::euler_number(n) == reference::kEuler[n];
    for (unsigned n = 0; n < reference::kEulerTangent.size(); ++n)
        ok = ok && exact::euler_tangent_number(n) == reference::kEulerTangent[n];
    for (unsigned n = 0; n < reference::kAndre.size(); ++n)
        ok = ok && exact::andre_number(n) == reference::kAndre[n];
    for (unsigned n = 0; n < reference::kCentralBernoulli.size(); ++n)
        ok = ok && exact::central_bernoulli_number(n) ==
                       BigRational(std::string(reference::kCentralBernoulli[n]));
    for (unsigned n = 0; n < reference::kExtendedEuler.size(); ++n)
        ok = ok && exact::extended_euler_number(n) == reference::kExtendedEuler[n];
    s.add_exact("integer family golden lists", ok);

    ok = true;
    for (unsigned n = 0; n <= 9; ++n) {
        ok = ok && exact::swiss_knife_poly(n) ==
                       poly_from_strings(reference::kSwissKnifePoly[n].data(), n + 1);
        ok = ok && exact::central_bernoulli_poly(n) ==
                       poly_from_strings(reference::kCentralPoly[n].data(), n + 1);
    }
    for (unsigned n = 0; n <= 8; ++n)
        ok = ok && exact::genocchi_poly(n) ==
                       poly_from_strings(reference::kGenocchiPoly[n].data(), n == 0 ? 1 : n);
    s.add_exact("polynomial tables (swiss-knife, central, genocchi)", ok);

    // cumulant-coefficient triangle rows against the numeric cumulants
    const auto b = bernoulli_cumulants(4);
    const double b1 = reference::kBeta[1], b2 = reference::kBeta[2], b3 = reference::kBeta[3],
                 b4 = reference::kBeta[4];
    const auto& row = exact::cumulant_coefficient_rows()[3];
    const double want4 = row[0] * b1 * b1 * b1 * b1 + row[1] * b1 * b1 * b2 + row[2] * b1 * b3 +
                         row[3] * b2 * b2 + row[4] * b4;
    worst = std::max(std::fabs(b[0] - b1), std::fabs(b[1] - (b2 - b1 * b1)));
    worst = std::max(worst, std::fabs(b[3] - want4));
    s.add("bernoulli cumulants vs coefficient triangle", worst, 1e-11);

    return s.results;
}

std::vector<CheckResult> suite_identities() {
    Suite s;

    const Complex fe_pts[] = {{-2.5, 0}, {-0.5, 0}, {1.0 / 3.0, 0}, {2.5, 0}, {4.2, 0}, {2, 1}, {0.5, 3}};
    double worst = 0.0;
    for (const Complex& p : fe_pts) worst = std::max(worst, functional_equation_check(p));
    s.add("functional equation, normalized residual", worst, 1e-9);

    worst = 0.0;
    for (const Complex& p : {Complex{1.0 / 3.0, 0}, Complex{2.5, 0}, Complex{2, 1}})
        worst = std::max(worst, symmetric_equation_residual(p));
    s.add("symmetric functional equation", worst, 1e-9);

    worst = 0.0;
    for (int k = 1; k <= 5; ++k) worst = std::max(worst, std::abs(bernoulli_fn(2 * k + 1)));
    s.add("odd trivial zeros |B(2k+1)|, k = 1..5", worst, 1e-10);

    bool ok = true;
    for (unsigned n = 0; n <= 20; ++n) ok = ok && exact::half_shift_identity_check(n);
    s.add_exact("half-shift identity 2^n B_n(1) = sum C(n,k) 2^k B_k(1/2)", ok);

    worst = 0.0;
    for (double sr : {0.0, 1.0, 2.5})
        worst = std::max(worst, norm_resid(extended_euler(sr), euler_secant(sr) + euler_tangent(sr)));
    s.add("extended euler = secant + tangent", worst, 1e-10);

    ok = true;
    for (unsigned n = 0; n <= 8; ++n) {
        RationalPolynomial gap = exact::bernoulli_poly(n) - exact::central_bernoulli_poly(n);
        gap *= BigRational(2);
        ok = ok && exact::genocchi_poly(n) == gap;
    }
    s.add_exact("genocchi polynomials are twice the central gap", ok);

    ok = true;
    {
        const auto todd = exact::todd_bernoulli(61);
        for (unsigned n = 0; n <= 60 && ok; ++n) {
            const BigRational b = exact::bernoulli_number(n);
            ok = b == todd[n] && b == exact::family_from_swiss_knife(exact::Family::bernoulli, n);
        }
    }
    s.add_exact("bernoulli route-triple (worpitzky, todd, swiss-knife) n <= 60", ok);

    ok = true;
    for (unsigned n = 0; n <= 10; ++n) {
        const BigRational a = exact::eulerian_polynomial_at(n, -1);
        ok = ok && a == exact::stirling_fubini_p(n, 1) && a == BigRational(exact::euler_tangent_number(n));
    }
    s.add_exact("euler tangent = eulerian(-1) = stirling-fubini(1), n <= 10", ok);

    worst = 0.0;
    for (unsigned n = 2; n <= 10; ++n)
        worst = std::max(worst, norm_resid(seki(n), std::abs(extended_bernoulli(n))));
    s.add("seki interpolates |extended bernoulli|, n = 2..10", worst, 1e-10);
    s.add("seki(1) = 1/2 while extended-bernoulli(1) = 1", norm_resid(seki(1), 0.5), 1e-10);

    worst = 0.0;
    for (unsigned n = 0; n <= 12; ++n)
        worst = std::max(worst, norm_resid(genocchi_gen(n, 1.0), genocchi(n)));
    s.add("generalized genocchi at v = 1, n <= 12", worst, 1e-10);

    worst = 0.0;
    for (int n = 0; n <= 12; ++n)
        worst = std::max(worst, std::fabs(stieltjes_constant(n) + bernoulli_constant(n + 1) / (n + 1.0)));
    s.add("stieltjes vs bernoulli constants", worst, 1e-12);

    worst = std::fabs(derivative_at_zero(1) + kEulerGamma);
    worst = std::max(worst, std::fabs(derivative_at_zero(2) - reference::kBeta[2]));
    worst = std::max(worst, std::fabs(derivative_at_zero(3) - reference::kBeta[3]));
    s.add("derivatives at zero beta_n = -n gamma_(n-1)", worst, 1e-11);

    worst = 0.0;
    for (const auto& [n, terms] : {std::pair{3, 18}, std::pair{5, 26}}) {
        double acc = 0.0, fact = 1.0, npow = 1.0;
        for (int j = 0; j <= terms; ++j) {
            acc += stieltjes_constant(j) * npow / fact;
            npow *= n;
            fact *= j + 1.0;
        }
        worst = std::max(worst, std::fabs(acc - 1.0 / n));
    }
    s.add("gamma-series identity sum gamma_j n^j/j! = 1/n, n in {3,5}", worst, 1e-8);

    worst = 0.0;
    for (double sr : {0.5, 2.0, 3.7}) {
        const Complex moment = sech2_power_moment_report(sr).value;
        const double factor = kPi * cospi(0.5 * sr) / (std::exp((1.0 - sr) * kLn2) - 1.0);
        worst = std::max(worst, norm_resid(factor * moment, bernoulli_fn(sr)));
    }
    {
        const Complex m1 = sech2_power_moment_report(1.0).value;
        worst = std::max(worst, std::fabs((kPi * kPi / std::log(4.0)) * m1.real() - 0.5));
    }
    s.add("secant decomposition of the real bernoulli function", worst, 1e-8);

    {
        const double h = 1e-5;
        const Complex lzeta2 = (riemann_zeta(2 + h) - riemann_zeta(2 - h)) / (2.0 * h) / riemann_zeta(2);
        const Complex want = digamma(2) + lzeta2 + (0.5 - std::log(2.0 * kPi));
        s.add("log-derivative riemann split at s = 2", norm_resid(log_derivative(2), want), 1e-6);
        s.add_exact("log-derivative limit at 0 is -gamma",
                    log_derivative(0) == Complex(-kEulerGamma, 0.0));
    }

    s.add("xi(2) = pi/6", std::abs(xi_fn(2) - Complex(kPi / 6.0, 0)), 1e-12);
    s.add("xi(-1) = xi(2)", std::abs(xi_fn(-1) - xi_fn(2)), 1e-12);
    worst = 0.0;
    for (const Complex p : {Complex{-1.5, 0}, Complex{0.25, 0}, Complex{2, 0}, Complex{3, 0}, Complex{0.5, 2}})
        worst = std::max(worst, norm_resid(xi_fn(p), xi_fn(1.0 - p)));
    s.add("xi symmetry xi(s) = xi(1-s)", worst, 1e-9);

    worst = std::abs(euler_secant(-1) - Complex(kPi / 2.0, 0));
    worst = std::max(worst, std::abs(euler_tangent(-1) - Complex(kLn2, 0)));
    worst = std::max(worst, std::abs(extended_euler(-1) - Complex(kPi / 2.0 + kLn2, 0)));
    s.add("limit values at s = -1 (pi/2, log 2, pi/2 + log 2)", worst, 1e-12);

    worst = 0.0;
    for (double v : {0.25, 0.5, 1.0, 1.5})
        for (const Complex p : {Complex{-6.5, 0}, Complex{2.5, 3.0}}) {
            const Complex lhs = hurwitz_zeta(p, v);
            const Complex rhs = hurwitz_zeta(p, v + 1.0) + cpow_principal(v, -p);
            worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs)));
        }
    s.add("hurwitz recurrence spot checks", worst, 1e-10);

    return s.results;
}

std::vector<CheckResult> suite_asymptotics() {
    Suite s;
    for (unsigned n : {30u, 40u, 50u}) {
        const double exact_mag = std::fabs(rat_to_double(exact::bernoulli_number(n)));
        const double rel = std::fabs(std::fabs(asymptotic_bernoulli(n, 5)) - exact_mag) / exact_mag;
        std::ostringstream name;
        name << "asymptotic |B(" << n << ")|, measured " << std::fixed
             << -std::log10(std::max(rel, 1e-17)) << " digits";
        s.add(name.str(), rel, 1e-6);
    }
    const double s30 = rat_to_double(exact::seki_number(30));
    s.add("asymptotic seki(30)/S_30 - 1", std::fabs(asymptotic_seki(30, 5) / s30 - 1.0), 1e-6);
    for (unsigned n : {30u, 40u}) {
        const double e = std::fabs(static_cast<double>(exact::euler_number(n)));
        s.add("asymptotic |E(" + std::to_string(n) + ")|",
              std::fabs(std::fabs(asymptotic_euler(n, 5)) - e) / e, 1e-6);
    }
    double worst = 0.0;
    for (double x : {20.0, 30.0})
        worst = std::max(worst, std::fabs(log_andre_approx(x) - std::log(std::abs(andre(x)))));
    s.add("log-andre expansion vs analytic values", worst, 1e-8);
    return s.results;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"routes", "tables", "identities", "asymptotics"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
    if (suite == "routes") return suite_routes();
    if (suite == "tables") return suite_tables();
    if (suite == "identities") return suite_identities();
    if (suite == "asymptotics") return suite_asymptotics();
    throw std::invalid_argument("unknown check suite: " + suite);
}

}  // namespace bernoulli::checks
