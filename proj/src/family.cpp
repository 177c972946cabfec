#include "bernoulli/family.hpp"

#include "bernoulli/exact.hpp"
#include "bernoulli/gamma.hpp"
#include "bernoulli/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace bernoulli {

namespace {

constexpr double kPatchRadius = 1e-8;

Complex expi_pi(const Complex& s) {  // e^(i pi s)
    return cospi_c(s) + Complex(0, 1) * sinpi_c(s);
}

// s/(2^s - 1), regular at s = 0 with value 1/ln 2.
Complex s_over_pow2m1(const Complex& s) {
    return 1.0 / (kLn2 * expm1_over(s * kLn2));
}

bool near(const Complex& s, double x) { return std::abs(s - x) < kPatchRadius; }

double rat_to_double(const BigRational& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

}  // namespace

std::string to_string(RouteTag route) {
    switch (route) {
        case RouteTag::zeta: return "zeta";
        case RouteTag::jensen: return "jensen";
        case RouteTag::hasse: return "hasse";
        case RouteTag::hurwitz: return "hurwitz";
        case RouteTag::series: return "series";
        case RouteTag::asymptotic: return "asymptotic";
    }
    return "?";
}

std::optional<RouteTag> route_from_name(std::string_view name) {
    static const std::pair<std::string_view, RouteTag> table[] = {
        {"zeta", RouteTag::zeta},       {"jensen", RouteTag::jensen},
        {"hasse", RouteTag::hasse},     {"hurwitz", RouteTag::hurwitz},
        {"series", RouteTag::series},   {"asymptotic", RouteTag::asymptotic},
    };
    for (const auto& [n, r] : table)
        if (n == name) return r;
    return std::nullopt;
}

Complex bernoulli_fn(const Complex& s) {
    if (near(s, 0.0)) return 1.0 - kEulerGamma * s;  // 1 + beta_1 s
    return -s * riemann_zeta(1.0 - s);
}

Complex bernoulli_gen(const Complex& s, double v) {
    if (v <= 0.0) throw std::domain_error("bernoulli_gen: require v > 0");
    if (near(s, 0.0)) return 1.0 + digamma(v) * s;  // 1 + beta_1(v) s
    return -s * hurwitz_zeta(1.0 - s, v);
}

Complex central_bernoulli(const Complex& s) {
    return bernoulli_fn(s) * (std::exp((1.0 - s) * kLn2) - 1.0);
}

Complex alternating_bernoulli(const Complex& s) {
    return (1.0 - std::exp(s * kLn2)) * bernoulli_fn(s);
}

Complex genocchi(const Complex& s) { return 2.0 * alternating_bernoulli(s); }

Complex genocchi_gen(const Complex& s, double v) {
    if (v <= 0.0) throw std::domain_error("genocchi_gen: require v > 0");
    // 2^s (B(s,v/2) - B(s,(v+1)/2)) = -s 2^s (zeta(1-s,v/2) - zeta(1-s,(v+1)/2))
    if (s == Complex(0.0, 0.0)) return 0.0;
    return -s * std::exp(s * kLn2) * hurwitz_zeta_diff(1.0 - s, 0.5 * v, 0.5 * (v + 1.0));
}

Complex euler_gen(const Complex& s, double v) {
    if (v <= 0.0) throw std::domain_error("euler_gen: require v > 0");
    if (s == Complex(-1.0, 0.0))
        throw std::domain_error("euler_gen: s = -1 excluded (use the tangent/secant limits)");
    // -G(s+1,v)/(s+1) with the (s+1) cancelled against the zeta pole
    return std::exp((s + 1.0) * kLn2) * hurwitz_zeta_diff(-s, 0.5 * v, 0.5 * (v + 1.0));
}

Complex euler_tangent(const Complex& s) {
    // (4^(s+1) - 2^(s+1)) B(s+1)/(s+1) = 2^u ln2 phi(u ln2) B(u), u = s+1
    const Complex u = s + 1.0;
    return std::exp(u * kLn2) * kLn2 * expm1_over(u * kLn2) * bernoulli_fn(u);
}

Complex euler_secant(const Complex& s) {
    // 2 Im(Li_-s(i)) continued: (Li_-s(i) - Li_-s(-i))/i
    const Complex diff = polylog_unit(-s, 0.25) - polylog_unit(-s, 0.75);
    return diff / Complex(0.0, 1.0);
}

Complex bernoulli_secant(const Complex& s) {
    if (s == Complex(0.0, 0.0))
        throw std::domain_error("bernoulli_secant: pole at s = 0");
    // 2^(s-1)/(2^s-1) (B(s,3/4) - B(s,1/4))
    //   = -2^(s-1) [s/(2^s-1)] (zeta(1-s,3/4) - zeta(1-s,1/4))
    const Complex d = hurwitz_zeta_diff(1.0 - s, 0.75, 0.25);
    return -std::exp((s - 1.0) * kLn2) * s_over_pow2m1(s) * d;
}

Complex extended_zeta(const Complex& s) {
    if (s == Complex(1.0, 0.0)) throw std::domain_error("extended_zeta: pole at s = 1");
    const Complex d = hurwitz_zeta_diff(s, 0.25, 0.75);
    return riemann_zeta(s) + d / (std::exp(s * kLn2) - 2.0);
}

Complex extended_bernoulli(const Complex& s) {
    if (near(s, 0.0)) return 1.0 + kPi / std::log(4.0);
    return -s * extended_zeta(1.0 - s);
}

Complex extended_euler(const Complex& s) {
    // (4^(s+1) - 2^(s+1)) extB(s+1)/(s+1), gap at -1 closes automatically
    const Complex u = s + 1.0;
    return std::exp(u * kLn2) * kLn2 * expm1_over(u * kLn2) * extended_bernoulli(u);
}

Complex andre(const Complex& s) {
    const Complex e_m = expi_pi(-(s + 1.0) / 2.0);  // (-i)^(s+1)
    const Complex e_p = expi_pi((s + 1.0) / 2.0);   // i^(s+1)
    return e_m * polylog_unit(-s, 0.25) + e_p * polylog_unit(-s, 0.75);
}

Complex andre_signed(const Complex& s) {
    const Complex f = Complex(0, 1) * expi_pi(-s / 2.0);
    return f * (polylog_unit(-s, 0.75) - expi_pi(s) * polylog_unit(-s, 0.25));
}

Complex seki(const Complex& s) {
    if (s == Complex(0.0, 0.0)) return -1.0;  // limiting value
    // s A(s-1)/(4^s - 2^s) = A(s-1) 2^-s [s/(2^s - 1)]
    return andre(s - 1.0) * std::exp(-s * kLn2) * s_over_pow2m1(s);
}

Complex seki_signed(const Complex& s) {
    if (s == Complex(0.0, 0.0)) return 1.0;  // stated convention S*(0) = 1
    // s e^(i pi s/2)/(2^s - 4^s) (e^(i pi s) Li_(1-s)(-i) + Li_(1-s)(i))
    // evaluates to -(-1)^n S_n at the positive integers, the opposite of
    // the defining sign S*_n = (-1)^n S_n; negated here so the function
    // interpolates the signed Seki numbers.
    const Complex bracket = expi_pi(s) * polylog_unit(1.0 - s, 0.75) + polylog_unit(1.0 - s, 0.25);
    return std::exp(-s * kLn2) * s_over_pow2m1(s) * expi_pi(s / 2.0) * bracket;
}

Complex tau_factor(const Complex& s) {
    // tau^-s + (-tau)^-s with principal branches = 2^(1-s) pi^-s cos(pi s/2)
    return std::exp((1.0 - s) * kLn2 - s * std::log(kPi)) * cospi_c(s / 2.0);
}

double functional_equation_check(const Complex& s) {
    if (s == Complex(1.0, 0.0)) throw std::domain_error("functional_equation_check: s = 1");
    if (is_real_integer(s + 1.0) && s.real() <= -1.0)
        throw std::domain_error("functional_equation_check: Gamma pole at s+1 nonpositive integer");
    const Complex lhs = bernoulli_fn(s);
    const Complex rhs = bernoulli_fn(1.0 - s) / (1.0 - s) * tau_factor(s) * gamma(s + 1.0);
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

double symmetric_equation_residual(const Complex& s) {
    const Complex lhs = bernoulli_fn(1.0 - s) * gamma(s / 2.0 + 1.0) * std::exp(-s / 2.0 * std::log(kPi));
    const Complex rhs =
        bernoulli_fn(s) * gamma((1.0 - s) / 2.0 + 1.0) * std::exp(-(1.0 - s) / 2.0 * std::log(kPi));
    return std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
}

Complex xi_fn(const Complex& s) {
    // Gamma(sigma+1) poles at odd s >= 3 cancel against B's trivial
    // zeros; the reflected argument is regular there.
    Complex w = s;
    Complex sigma = (1.0 - w) / 2.0;
    if (is_real_integer(sigma + 1.0) && sigma.real() <= -1.0) {
        w = 1.0 - s;
        sigma = (1.0 - w) / 2.0;
    }
    return bernoulli_fn(w) * gamma(sigma + 1.0) * std::exp(-sigma * std::log(kPi));
}

Complex hurwitz_bernoulli(const Complex& s, double v) {
    const double vq = 4.0 * v;
    if (!(v > 0.0 && v <= 1.0) || vq != std::round(vq))
        throw std::domain_error("hurwitz_bernoulli: v must be one of 1/4, 1/2, 3/4, 1");
    if (s.real() <= 1.0)
        throw std::domain_error("hurwitz_bernoulli: series representation needs Re(s) > 1");
    const auto ell = [&s](double x) {
        // L(s, x) = -s!/(2 pi)^s Li_s(e^(2 pi i x)); x = 0 folds onto 1
        const double xx = (x == 0.0) ? 1.0 : x;
        return -gamma(s + 1.0) * std::exp(-s * std::log(2.0 * kPi)) * polylog_unit(s, xx);
    };
    return expi_pi(-s / 2.0) * ell(v) + expi_pi(s / 2.0) * ell(1.0 - v);
}

HasseResult hasse_bernoulli(const Complex& s, double v, int terms) {
    if (v <= 0.0) throw std::domain_error("hasse_bernoulli: require v > 0");
    if (terms < 1) throw std::domain_error("hasse_bernoulli: require terms >= 1");
    // For nonnegative integer s the series terminates; exact binary
    // powers keep the forward differences exactly zero past degree s.
    const bool natural_s =
        s.imag() == 0.0 && s.real() >= 0.0 && s.real() <= 48.0 && s.real() == std::round(s.real());
    std::vector<Complex> row(static_cast<std::size_t>(terms));
    for (int k = 0; k < terms; ++k) {
        if (natural_s) {
            double p = 1.0;
            for (int j = 0; j < static_cast<int>(s.real()); ++j) p *= v + k;
            row[k] = p;
        } else {
            row[k] = cpow_principal(Complex(v + k, 0.0), s);
        }
    }
    Complex acc = 0.0;
    double last_term = 0.0, prev1 = 0.0, prev2 = 0.0;
    int used = 0;
    bool terminated = false;
    for (int n = 0; n < terms; ++n) {
        const Complex a_n = row[0] / (n + 1.0);
        const double mag = std::abs(a_n);
        if (mag == 0.0 && natural_s && n > s.real()) {
            terminated = true;
            break;
        }
        // each difference step can double the rounding noise; once the
        // terms grow persistently the tail is pure noise and summing on
        // would only corrupt the value
        if (n >= 12 && mag > prev1 && prev1 > prev2 && mag > 1e3 * 2.2e-16) break;
        acc += a_n;
        last_term = mag;
        prev2 = prev1;
        prev1 = mag;
        used = n + 1;
        for (int k = 0; k + n + 1 < terms; ++k) row[k] -= row[k + 1];
    }
    if (terminated) return {acc, 1e-15 * (1.0 + std::abs(acc))};
    // leading-order power-law tail with a x3 safety margin
    const double p = std::max(0.25, s.real() + 1.0);
    const double tail = 3.0 * last_term * (used / p + 3.0);
    return {acc, tail + 1e-15 * (1.0 + std::abs(acc))};
}

EvalReport bernoulli_fn_series(const Complex& s, double v, int terms) {
    if (v < 0.5) throw std::domain_error("bernoulli_fn_series: constants need v >= 1/2");
    Complex acc = 0.0;
    Complex spow = 1.0;
    double fact = 1.0;
    double est = 0.0;
    double last = 0.0;
    for (int n = 0; n < terms; ++n) {
        const QuadResultReal beta = (v == 1.0) ? bernoulli_constant_report(n)
                                               : bernoulli_constant_general_report(n, v);
        const Complex term = beta.value * spow / fact;
        acc += term;
        est += beta.est_error * std::abs(spow) / fact;
        last = std::abs(term);
        spow *= s;
        fact *= n + 1.0;
    }
    return {acc, RouteTag::series, est + 10.0 * last + 1e-14 * (1.0 + std::abs(acc))};
}

Complex log_derivative(const Complex& s) {
    if (s == Complex(0.0, 0.0)) return {-kEulerGamma, 0.0};
    if (s.imag() == 0.0 && s.real() >= 3.0) {
        const double r = std::round(s.real());
        if (std::fabs(s.real() - r) < 1e-9 && std::fmod(r, 2.0) == 1.0)
            throw std::domain_error("log_derivative: undefined at odd integers >= 3");
    }
    const Complex b = bernoulli_fn(s);
    if (std::abs(b) < 1e-13) throw std::domain_error("log_derivative: zero of B");
    const Complex w = 1.0 - s;
    const double h = 1e-5;
    const Complex zp = riemann_zeta(w + h), zm = riemann_zeta(w - h), z0 = riemann_zeta(w);
    const Complex lzeta = (zp - zm) / (2.0 * h) / z0;
    return 1.0 / s - lzeta;
}

std::vector<double> bernoulli_cumulants(int count) {
    if (count < 1) throw std::domain_error("bernoulli_cumulants: require count >= 1");
    // log of the exponential generating series of the constants
    std::vector<double> f(static_cast<std::size_t>(count) + 1);
    double fact = 1.0;
    for (int k = 0; k <= count; ++k) {
        f[k] = bernoulli_constant(k) / fact;
        fact *= k + 1.0;
    }
    std::vector<double> g(f.size(), 0.0);
    for (int n = 1; n <= count; ++n) {
        double acc = f[n];
        for (int k = 1; k < n; ++k) acc -= (static_cast<double>(k) / n) * g[k] * f[n - k];
        g[n] = acc;
    }
    std::vector<double> b(static_cast<std::size_t>(count));
    fact = 1.0;
    for (int n = 1; n <= count; ++n) {
        fact *= n;
        b[n - 1] = fact * g[n];
    }
    return b;
}

namespace {

double stirling_remainder(double s, int k_terms) {
    // R_K(s) = exp(1/2 + sum B(n+1)/((n+1) n) s^-n)
    double expo = 0.5;
    double spow = 1.0 / s;
    for (int n = 1; n <= k_terms; ++n) {
        const double b = rat_to_double(exact::bernoulli_number(static_cast<unsigned>(n + 1)));
        expo += b / ((n + 1.0) * n) * spow;
        spow /= s;
    }
    return std::exp(expo);
}

void check_asym_domain(double s, int k_terms) {
    if (s <= 0.0) throw std::domain_error("asymptotic expansion: require s > 0");
    if (k_terms < 1 || k_terms > 10) throw std::domain_error("asymptotic expansion: require 1 <= K <= 10");
}

}  // namespace

double asymptotic_bernoulli(double s, int k_terms) {
    check_asym_domain(s, k_terms);
    const double envelope =
        4.0 * kPi * std::pow(s / (2.0 * kPi * std::exp(1.0)), s + 0.5) * stirling_remainder(s, k_terms);
    const double c = -cospi(0.5 * s);
    // near the oscillation zeros only the envelope magnitude is useful
    if (std::fabs(c) < 1e-3) return envelope;
    return envelope * c;
}

double asymptotic_euler(double s, int k_terms) {
    check_asym_domain(s, k_terms);
    const double envelope =
        4.0 * std::pow(2.0 * s / (kPi * std::exp(1.0)), s + 0.5) * stirling_remainder(s, k_terms);
    const double c = -cospi(0.5 * s);
    if (std::fabs(c) < 1e-3) return envelope;
    return -envelope * c;
}

double asymptotic_seki(double s, int k_terms) {
    check_asym_domain(s, k_terms);
    return 4.0 * kPi * std::pow(s / (2.0 * kPi * std::exp(1.0)), s + 0.5) * stirling_remainder(s, k_terms);
}

double log_andre_approx(double s) {
    if (s <= 0.0) throw std::domain_error("log_andre_approx: require s > 0");
    const double s2 = s * s, s4 = s2 * s2, s6 = s4 * s2;
    return std::log(4.0) + (0.5 + s) * std::log(2.0 * s / kPi) +
           (2.0 / 7.0 - s2 + 30.0 * s4 - 360.0 * s6) / (360.0 * s4 * s);
}

double derivative_at_zero(int n) {
    if (n < 1) throw std::domain_error("derivative_at_zero: require n >= 1");
    const double beta = bernoulli_constant(n);
    const double via_stieltjes = -n * stieltjes_constant(n - 1);
    if (std::fabs(beta - via_stieltjes) > 1e-11 * std::max(1.0, std::fabs(beta)))
        throw std::runtime_error("derivative_at_zero: beta_n vs -n gamma_(n-1) inconsistency");
    return beta;
}

const std::vector<std::pair<std::string, FunctionId>>& function_registry() {
    static const std::vector<std::pair<std::string, FunctionId>> reg = {
        {"bernoulli", FunctionId::bernoulli},
        {"bernoulli-gen", FunctionId::bernoulli_gen},
        {"central", FunctionId::central},
        {"alternating", FunctionId::alternating},
        {"genocchi", FunctionId::genocchi},
        {"euler-tangent", FunctionId::euler_tangent},
        {"euler-secant", FunctionId::euler_secant},
        {"bernoulli-secant", FunctionId::bernoulli_secant},
        {"extended-bernoulli", FunctionId::extended_bernoulli},
        {"extended-euler", FunctionId::extended_euler},
        {"andre", FunctionId::andre},
        {"andre-signed", FunctionId::andre_signed},
        {"seki", FunctionId::seki},
        {"seki-signed", FunctionId::seki_signed},
        {"xi", FunctionId::xi},
        {"log-derivative", FunctionId::log_derivative},
    };
    return reg;
}

std::optional<FunctionId> function_from_name(std::string_view name) {
    for (const auto& [n, id] : function_registry())
        if (n == name) return id;
    return std::nullopt;
}

namespace {

EvalReport zeta_route(FunctionId fn, const Complex& s, std::optional<double> v) {
    const double vv = v.value_or(1.0);
    Complex val;
    switch (fn) {
        case FunctionId::bernoulli: val = v ? bernoulli_gen(s, vv) : bernoulli_fn(s); break;
        case FunctionId::bernoulli_gen: val = bernoulli_gen(s, vv); break;
        case FunctionId::central: val = central_bernoulli(s); break;
        case FunctionId::alternating: val = alternating_bernoulli(s); break;
        case FunctionId::genocchi: val = v ? genocchi_gen(s, vv) : genocchi(s); break;
        case FunctionId::euler_tangent: val = euler_tangent(s); break;
        case FunctionId::euler_secant: val = euler_secant(s); break;
        case FunctionId::bernoulli_secant: val = bernoulli_secant(s); break;
        case FunctionId::extended_bernoulli: val = extended_bernoulli(s); break;
        case FunctionId::extended_euler: val = extended_euler(s); break;
        case FunctionId::andre: val = andre(s); break;
        case FunctionId::andre_signed: val = andre_signed(s); break;
        case FunctionId::seki: val = seki(s); break;
        case FunctionId::seki_signed: val = seki_signed(s); break;
        case FunctionId::xi: val = xi_fn(s); break;
        case FunctionId::log_derivative: val = log_derivative(s); break;
    }
    const double est = (fn == FunctionId::log_derivative ? 1e-6 : 1e-12) * (1.0 + std::abs(val));
    return {val, RouteTag::zeta, est};
}

[[noreturn]] void unsupported_route(RouteTag route) {
    throw std::invalid_argument("route '" + to_string(route) + "' is not available for this function");
}

double require_real_positive(const Complex& s) {
    if (s.imag() != 0.0 || s.real() <= 0.0)
        throw std::domain_error("asymptotic route: require real s > 0");
    return s.real();
}

}  // namespace

EvalReport evaluate(FunctionId fn, const Complex& s, std::optional<double> v, RouteTag route,
                    const EvalOptions& opts) {
    switch (route) {
        case RouteTag::zeta:
            return zeta_route(fn, s, v);
        case RouteTag::jensen: {
            QuadResult q;
            switch (fn) {
                case FunctionId::bernoulli: q = bernoulli_fn_jensen_report(s, v.value_or(1.0), opts.quad); break;
                case FunctionId::bernoulli_gen: q = bernoulli_fn_jensen_report(s, v.value_or(1.0), opts.quad); break;
                case FunctionId::central: q = central_bernoulli_jensen_report(s, opts.quad); break;
                case FunctionId::euler_secant: {
                    if (s.imag() != 0.0 || s.real() != std::round(s.real()))
                        throw std::domain_error("jensen euler-secant: integer index required");
                    const auto r = euler_secant_jensen_report(static_cast<int>(s.real()), opts.quad);
                    return {{r.value, 0.0}, RouteTag::jensen, r.est_error};
                }
                case FunctionId::extended_euler: q = extended_euler_jensen_report(s, opts.quad); break;
                case FunctionId::xi: q = xi_jensen_report(s, opts.quad); break;
                default: unsupported_route(route);
            }
            return {q.value, RouteTag::jensen, q.est_error};
        }
        case RouteTag::hasse: {
            double vv;
            switch (fn) {
                case FunctionId::bernoulli: vv = v.value_or(1.0); break;
                case FunctionId::bernoulli_gen: vv = v.value_or(1.0); break;
                case FunctionId::central: vv = 0.5; break;
                default: unsupported_route(route);
            }
            const HasseResult h = hasse_bernoulli(s, vv, opts.hasse_terms);
            return {h.value, RouteTag::hasse, h.tail_estimate};
        }
        case RouteTag::hurwitz: {
            double vv;
            switch (fn) {
                case FunctionId::bernoulli: vv = v.value_or(1.0); break;
                case FunctionId::bernoulli_gen: vv = v.value_or(1.0); break;
                case FunctionId::central: vv = 0.5; break;
                default: unsupported_route(route);
            }
            const Complex h = hurwitz_bernoulli(s, vv);
            return {h, RouteTag::hurwitz, 1e-11 * (1.0 + std::abs(h))};
        }
        case RouteTag::series: {
            switch (fn) {
                case FunctionId::bernoulli:
                case FunctionId::bernoulli_gen:
                    return bernoulli_fn_series(s, v.value_or(1.0), opts.series_terms);
                default: unsupported_route(route);
            }
        }
        case RouteTag::asymptotic: {
            const double sr = require_real_positive(s);
            double val;
            switch (fn) {
                case FunctionId::bernoulli: val = asymptotic_bernoulli(sr, opts.asym_terms); break;
                case FunctionId::euler_secant: val = asymptotic_euler(sr, opts.asym_terms); break;
                case FunctionId::seki: val = asymptotic_seki(sr, opts.asym_terms); break;
                case FunctionId::andre: val = std::exp(log_andre_approx(sr)); break;
                default: unsupported_route(route);
            }
            // remainder-series next term plus the dropped zeta tail
            const double next = std::pow(sr, -opts.asym_terms - 1.0) / 12.0 + std::pow(2.0, -sr);
            return {{val, 0.0}, RouteTag::asymptotic, std::fabs(val) * next};
        }
    }
    throw std::invalid_argument("evaluate: unknown route");
}

}  // namespace bernoulli
