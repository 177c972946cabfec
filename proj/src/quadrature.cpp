#include "bernoulli/quadrature.hpp"

#include "bernoulli/gamma.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace bernoulli {

namespace {

struct Rule {
    std::vector<double> x, w;  // nodes/weights on [-1, 1], endpoints excluded
};

// Gauss-Legendre by Newton iteration on the Legendre recurrence.
Rule make_gauss_legendre(int n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 1; k < n; ++k) {
                const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

const Rule& gauss_legendre_rule(int n) {
    static std::map<int, Rule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

// Open tanh-sinh rule; nodes cluster double-exponentially at both ends.
// Nodes whose abscissa rounds onto an endpoint carry ~1e-30 weight and
// are dropped so that mapped endpoints (branch points) are never hit.
Rule make_tanh_sinh(int n) {
    const int half = std::max(4, n / 2);
    const double tmax = 3.45;
    const double h = tmax / half;
    Rule r;
    for (int k = -half; k <= half; ++k) {
        const double t = h * k;
        const double u = 0.5 * kPi * std::sinh(t);
        const double x = std::tanh(u);
        if (std::fabs(x) >= 1.0) continue;
        const double w = h * 0.5 * kPi * std::cosh(t) / (std::cosh(u) * std::cosh(u));
        r.x.push_back(x);
        r.w.push_back(w);
    }
    return r;
}

const Rule& tanh_sinh_rule(int n) {
    static std::map<int, Rule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_tanh_sinh(n)).first;
    return it->second;
}

const Rule& rule_for(QuadScheme scheme, int n) {
    return scheme == QuadScheme::gauss_legendre ? gauss_legendre_rule(n) : tanh_sinh_rule(n);
}

// Jensen weight (e^-pi z + e^pi z)^-2, overflow-free.
double jensen_weight(double z) {
    const double t = std::exp(-2.0 * kPi * std::fabs(z));
    const double d = 1.0 + t;
    return t / (d * d);
}

// One pass of sum w_i f(x_i) jensen_weight(x_i) over [a, b]; also
// accumulates sum |w_i f w| for the roundoff floor.
template <class F>
Complex weighted_pass(F&& f, double a, double b, QuadScheme scheme, int n, double& abs_acc) {
    const Rule& r = rule_for(scheme, n);
    const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
    Complex acc = 0.0;
    abs_acc = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        const double z = mid + rad * r.x[i];
        const Complex t = rad * r.w[i] * f(z) * jensen_weight(z);
        acc += t;
        abs_acc += std::abs(t);
    }
    return acc;
}

// Node-doubling evaluation with an honest error estimate.
template <class F>
QuadResult integrate_weighted(F&& f, double a, double b, QuadScheme scheme, int nodes) {
    double abs1 = 0.0, abs2 = 0.0;
    const Complex coarse = weighted_pass(f, a, b, scheme, nodes, abs1);
    const Complex fine = weighted_pass(f, a, b, scheme, 2 * nodes, abs2);
    const double est = std::abs(fine - coarse) + 4.0 * 2.2e-16 * abs2;
    return {fine, est};
}

void check_convergence(const QuadResult& q, double tol, const char* what) {
    if (q.est_error > 10.0 * tol)
        throw QuadratureError(std::string(what) + ": quadrature did not converge to tolerance");
}

// Widen the truncation until |w(Z)|^sigma e^(-2 pi Z) is negligible.
double widen_half_width(double z0, double sigma, double shift) {
    double z = std::max(z0, 7.0);
    while (sigma * std::log(z + shift + 1.0) - 2.0 * kPi * z > -46.0) z += 1.0;
    return z;
}

int widen_nodes(int n0, double z, QuadScheme scheme) {
    const double per_unit = scheme == QuadScheme::tanh_sinh ? 60.0 : 30.0;
    return std::max(n0, static_cast<int>(per_unit * z));
}

// Half-line rule for integrands with a z^alpha (or log-power) branch
// point at z = 0: tanh-sinh nodes with the distance-to-endpoint kept in
// full precision, range chosen so the transformed tail clears the
// target accuracy even as alpha approaches -1.
template <class F>
Complex singular_half_line_pass(F&& f, double z_top, double alpha, int n, double& abs_acc) {
    const double u_needed = std::max(27.0, 23.5 / std::max(0.02, 1.0 + alpha));
    const double tmax = std::asinh(u_needed * 2.0 / kPi);
    const int half = std::max(n / 2, static_cast<int>(55.0 * tmax));
    const double h = tmax / half;
    const double rad = 0.5 * z_top;
    Complex acc = 0.0;
    abs_acc = 0.0;
    for (int k = -half; k <= half; ++k) {
        const double t = h * k;
        const double u = 0.5 * kPi * std::sinh(t);
        // 1 + tanh(u) = 2/(1 + e^(-2u)), kept accurate for u << 0
        double one_plus_x;
        if (u >= 0.0) {
            one_plus_x = 2.0 / (1.0 + std::exp(-2.0 * u));
        } else {
            const double e = std::exp(2.0 * u);
            one_plus_x = 2.0 * e / (1.0 + e);
        }
        const double z = rad * one_plus_x;
        if (z <= 0.0 || z >= z_top) continue;
        const double ch = std::cosh(u);
        const double w = h * 0.5 * kPi * std::cosh(t) / (ch * ch);
        const Complex term = rad * w * f(z) * jensen_weight(z);
        acc += term;
        abs_acc += std::abs(term);
    }
    return acc;
}

template <class F>
QuadResult integrate_singular_half_line(F&& f, double z_top, double alpha, int nodes) {
    double abs1 = 0.0, abs2 = 0.0;
    const Complex coarse = singular_half_line_pass(f, z_top, alpha, nodes, abs1);
    const Complex fine = singular_half_line_pass(f, z_top, alpha, 2 * nodes, abs2);
    const double est = std::abs(fine - coarse) + 4.0 * 2.2e-16 * abs2;
    return {fine, est};
}

// ---- binary128 half-line integration for the Euler-number integral ----

struct QRule {
    std::vector<__float128> x, w;
};

__float128 pi_q() {
    static const __float128 v = 4 * atanq(static_cast<__float128>(1));
    return v;
}

QRule make_tanh_sinh_q(int n) {
    const int half = std::max(8, n / 2);
    // extreme node sits ~1e-35 from the endpoint
    const __float128 tm = static_cast<__float128>(3.95);
    const __float128 h = tm / half;
    const __float128 pi2 = pi_q() / 2;
    QRule r;
    for (int k = -half; k <= half; ++k) {
        const __float128 t = h * k;
        const __float128 u = pi2 * sinhq(t);
        const __float128 x = tanhq(u);
        if (fabsq(x) >= 1) continue;
        r.x.push_back(x);
        r.w.push_back(h * pi2 * coshq(t) / (coshq(u) * coshq(u)));
    }
    return r;
}

__float128 jensen_weight_q(__float128 z) {
    const __float128 t = expq(-2 * pi_q() * fabsq(z));
    const __float128 d = 1 + t;
    return t / (d * d);
}

template <class F>
__float128 weighted_pass_q(F&& f, __float128 a, __float128 b, int n) {
    static std::map<int, QRule> cache;
    static std::mutex mtx;
    const QRule* rule;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, make_tanh_sinh_q(n)).first;
        rule = &it->second;
    }
    const __float128 mid = (a + b) / 2, rad = (b - a) / 2;
    __float128 acc = 0;
    for (std::size_t i = 0; i < rule->x.size(); ++i) {
        const __float128 z = mid + rad * rule->x[i];
        acc += rad * rule->w[i] * f(z) * jensen_weight_q(z);
    }
    return acc;
}

}  // namespace

double sigma_n(int n, double z) {
    if (n < 0) throw std::domain_error("sigma_n: require n >= 0");
    // The binomial split sum_k (-1)^k C(n,2k) a^(n-2k) b^(2k) cancels
    // ~0.14 n digits; the polar form of the same quantity does not.
    const double a = 0.5 * std::log(z * z + 0.25);
    const double b = std::atan(2.0 * z);
    if (n == 0) return 1.0;
    const double mod = std::hypot(a, b);
    const double arg = std::atan2(b, a);
    return std::pow(mod, n) * std::cos(n * arg);
}

namespace {

QuadResultReal sigma_integral(int n, const QuadratureSpec& spec) {
    // 4 pi int_0^Z sigma_n(z) jensen_weight(z) dz
    const double z = std::max(widen_half_width(spec.half_width, 0.45 * n, 1.0), 7.0 + 0.12 * n);
    // sigma_n oscillates ~n/2 times over the range, compressed toward
    // small z; scale the node budget with the index
    const int nodes = std::max(widen_nodes(spec.nodes, z, spec.scheme), spec.nodes + 30 * n);
    const QuadResult q = integrate_weighted([n](double t) { return Complex(sigma_n(n, t), 0.0); },
                                            0.0, z, spec.scheme, nodes);
    return {4.0 * kPi * q.value.real(), 4.0 * kPi * q.est_error};
}

}  // namespace

QuadResultReal bernoulli_constant_report(int n, const QuadratureSpec& spec) {
    if (n < 0) throw std::domain_error("bernoulli_constant: require n >= 0");
    const QuadResultReal r = sigma_integral(n, spec);
    if (n <= 20 && r.est_error > 1e-11 * std::max(1.0, std::fabs(r.value)))
        throw QuadratureError("bernoulli_constant: quadrature did not converge");
    return r;
}

double bernoulli_constant(int n, const QuadratureSpec& spec) {
    return bernoulli_constant_report(n, spec).value;
}

QuadResultReal stieltjes_constant_report(int n, const QuadratureSpec& spec) {
    if (n < 0) throw std::domain_error("stieltjes_constant: require n >= 0");
    const QuadResultReal r = sigma_integral(n + 1, spec);
    const double scale = -1.0 / (n + 1.0);
    return {scale * r.value, std::fabs(scale) * r.est_error};
}

double stieltjes_constant(int n, const QuadratureSpec& spec) {
    return stieltjes_constant_report(n, spec).value;
}

QuadResultReal bernoulli_constant_general_report(double r, double v, const QuadratureSpec& spec) {
    if (v < 0.5) throw std::domain_error("bernoulli_constant_general: require v >= 1/2");
    // log(v - 1/2 + ix) vanishes at x = 0 exactly when v = 3/2; negative
    // powers of it stop being integrable there (elsewhere the index may
    // go below -1, the table's r = -1 row included)
    if (r <= -1.0 && v == 1.5)
        throw std::domain_error("bernoulli_constant_general: require r > -1 at v = 3/2");
    const double base = v - 0.5;
    const double z = widen_half_width(spec.half_width, 0.0, base);
    const auto f = [base, r](double t) {
        const Complex lg = std::log(Complex(base, t));
        return cpow_principal(lg, r);
    };
    // log-power branch point at z = 0 when v = 1/2: double-exponential
    // endpoint clustering; plain rule otherwise
    const QuadResult q = (base == 0.0)
                             ? integrate_singular_half_line(f, z, 0.0, widen_nodes(spec.nodes, z, QuadScheme::tanh_sinh))
                             : integrate_weighted(f, 0.0, z, spec.scheme, widen_nodes(spec.nodes, z, spec.scheme));
    // conjugate symmetry folds the full line onto [0, Z]
    const QuadResultReal out{4.0 * kPi * q.value.real(), 4.0 * kPi * q.est_error};
    if (out.est_error > 10.0 * 1e-10 * std::max(1.0, std::fabs(out.value)))
        throw QuadratureError("bernoulli_constant_general: quadrature did not converge");
    return out;
}

double bernoulli_constant_general(double r, double v, const QuadratureSpec& spec) {
    return bernoulli_constant_general_report(r, v, spec).value;
}

QuadResult bernoulli_fn_jensen_report(const Complex& s, double v, const QuadratureSpec& spec) {
    if (v < 0.5) throw std::domain_error("bernoulli_fn_jensen: require v >= 1/2");
    if (v == 0.5) return central_bernoulli_jensen_report(s, spec);
    const double base = v - 0.5;
    const double z = widen_half_width(spec.half_width, std::max(0.0, s.real()), base);
    const int nodes = widen_nodes(spec.nodes, 2.0 * z, spec.scheme);
    const auto f = [base, s](double t) { return cpow_principal(Complex(base, t), s); };
    QuadResult q = integrate_weighted(f, -z, z, spec.scheme, nodes);
    q.value *= 2.0 * kPi;
    q.est_error *= 2.0 * kPi;
    check_convergence(q, 1e-9 * (1.0 + std::abs(q.value)), "bernoulli_fn_jensen");
    return q;
}

Complex bernoulli_fn_jensen(const Complex& s, double v, const QuadratureSpec& spec) {
    return bernoulli_fn_jensen_report(s, v, spec).value;
}

QuadResult sech2_power_moment_report(const Complex& s, const QuadratureSpec& spec) {
    if (s.real() <= -1.0) throw std::domain_error("sech2_power_moment: require Re(s) > -1");
    const double z = widen_half_width(spec.half_width, std::max(0.0, s.real()), 0.0);
    const int nodes = widen_nodes(spec.nodes, z, QuadScheme::tanh_sinh);
    const auto f = [s](double t) { return cpow_principal(Complex(t, 0.0), s); };
    // z^s branch point at 0: singular-endpoint rule
    QuadResult q = integrate_singular_half_line(f, z, s.real(), nodes);
    q.value *= 4.0;
    q.est_error *= 4.0;
    return q;
}

QuadResult central_bernoulli_jensen_report(const Complex& s, const QuadratureSpec& spec) {
    if (s.real() <= -1.0)
        throw std::domain_error("central_bernoulli_jensen: integral diverges for Re(s) <= -1");
    // (iz)^s + (-iz)^s = 2 cos(pi s/2) z^s on z > 0
    QuadResult q = sech2_power_moment_report(s, spec);
    const Complex factor = kPi * cospi_c(s / 2.0);
    q.value *= factor;
    q.est_error *= std::abs(factor);
    check_convergence(q, 1e-9 * (1.0 + std::abs(q.value)), "central_bernoulli_jensen");
    return q;
}

Complex central_bernoulli_jensen(const Complex& s, const QuadratureSpec& spec) {
    return central_bernoulli_jensen_report(s, spec).value;
}

QuadResultReal euler_secant_jensen_report(int n, const QuadratureSpec& spec) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("euler_secant_jensen: require even n >= 0");
    const int q = n + 1;
    double z = std::max(spec.half_width, 7.0);
    while (q * std::log(4.0 * z + 1.0) - 2.0 * kPi * z > -50.0) z += 1.0;
    const int nodes = widen_nodes(spec.nodes, z, QuadScheme::tanh_sinh);
    const __float128 qq = q;
    const auto f = [qq](__float128 t) {
        // 2 Re((1 + 4 i t)^q) = 2 (1 + 16 t^2)^(q/2) cos(q atan 4t)
        const __float128 m = powq(1 + 16 * t * t, qq / 2);
        return 2 * m * cosq(qq * atanq(4 * t));
    };
    const __float128 coarse = weighted_pass_q(f, 0, static_cast<__float128>(z), nodes);
    const __float128 fine = weighted_pass_q(f, 0, static_cast<__float128>(z), 2 * nodes);
    const double scale = 2.0 * kPi / q;
    const QuadResultReal out{scale * static_cast<double>(fine),
                             scale * static_cast<double>(fabsq(fine - coarse)) + 1e-15};
    if (out.est_error > 10.0 * 1e-9 * std::max(1.0, std::fabs(out.value)))
        throw QuadratureError("euler_secant_jensen: quadrature did not converge");
    return out;
}

double euler_secant_jensen(int n, const QuadratureSpec& spec) {
    return euler_secant_jensen_report(n, spec).value;
}

QuadResult extended_euler_jensen_report(const Complex& s, const QuadratureSpec& spec) {
    if (s == Complex(-1.0, 0.0)) throw std::domain_error("extended_euler_jensen: pole at s = -1");
    const Complex q = s + 1.0;
    const double z = widen_half_width(spec.half_width, std::max(0.0, q.real()) * 1.9, 1.0);
    const int nodes = widen_nodes(spec.nodes, 2.0 * z, spec.scheme);
    const Complex coeff = 1.0 - std::exp(-(2.0 * s + 1.0) * kLn2);  // 1 - 2^(-2s-1)
    const auto f = [q, coeff](double t) {
        return cpow_principal(Complex(1.0, 4.0 * t), q) + coeff * cpow_principal(Complex(2.0, 4.0 * t), q);
    };
    QuadResult r = integrate_weighted(f, -z, z, spec.scheme, nodes);
    const Complex factor = 2.0 * kPi / q;
    r.value *= factor;
    r.est_error *= std::abs(factor);
    check_convergence(r, 1e-8 * (1.0 + std::abs(r.value)), "extended_euler_jensen");
    return r;
}

Complex extended_euler_jensen(const Complex& s, const QuadratureSpec& spec) {
    return extended_euler_jensen_report(s, spec).value;
}

QuadResult xi_jensen_report(const Complex& s, const QuadratureSpec& spec) {
    const Complex g_arg = s / 2.0 + 1.0;
    if (is_real_integer(g_arg) && g_arg.real() <= 0.0)
        throw std::domain_error("xi_jensen: Gamma prefactor pole at s/2 + 1 nonpositive integer");
    const Complex u = 1.0 - s;
    const double z = widen_half_width(spec.half_width, std::max(0.0, u.real()), 0.5);
    const int nodes = widen_nodes(spec.nodes, 2.0 * z, spec.scheme);
    const auto f = [u](double t) { return cpow_principal(Complex(0.5, t), u); };
    QuadResult r = integrate_weighted(f, -z, z, spec.scheme, nodes);
    const Complex factor = 2.0 * gamma(g_arg) * std::exp((1.0 - s / 2.0) * std::log(kPi));
    r.value *= factor;
    r.est_error *= std::abs(factor);
    check_convergence(r, 1e-9 * (1.0 + std::abs(r.value)), "xi_jensen");
    return r;
}

Complex xi_jensen(const Complex& s, const QuadratureSpec& spec) {
    return xi_jensen_report(s, spec).value;
}

}  // namespace bernoulli
