#include "bernoulli/zeta.hpp"

#include "bernoulli/exact.hpp"
#include "bernoulli/gamma.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace bernoulli {

namespace {

constexpr int kEmTailTerms = 25;
// Below this real part the binary64 summation loses too many digits to
// cancellation and the binary128 path takes over.
constexpr double kWideThreshold = -0.5;
// Below this real part quarter-v arguments switch to the reflection form.
constexpr double kReflectThreshold = -21.0;

inline double r_log(double x) { return std::log(x); }
inline double r_exp(double x) { return std::exp(x); }
inline double r_sin(double x) { return std::sin(x); }
inline double r_cos(double x) { return std::cos(x); }
inline double r_fabs(double x) { return std::fabs(x); }
inline __float128 r_log(__float128 x) { return logq(x); }
inline __float128 r_exp(__float128 x) { return expq(x); }
inline __float128 r_sin(__float128 x) { return sinq(x); }
inline __float128 r_cos(__float128 x) { return cosq(x); }
inline __float128 r_fabs(__float128 x) { return fabsq(x); }

template <class R>
struct Cx {
    R re{}, im{};
};

template <class R> Cx<R> operator+(Cx<R> a, Cx<R> b) { return {a.re + b.re, a.im + b.im}; }
template <class R> Cx<R> operator-(Cx<R> a, Cx<R> b) { return {a.re - b.re, a.im - b.im}; }
template <class R> Cx<R> operator*(Cx<R> a, Cx<R> b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R> Cx<R> operator*(R a, Cx<R> b) { return {a * b.re, a * b.im}; }
template <class R> Cx<R> operator/(Cx<R> a, Cx<R> b) {
    const R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <class R> R abs2(Cx<R> z) { return z.re * z.re + z.im * z.im; }
template <class R> Cx<R> cx_exp(Cx<R> z) {
    const R e = r_exp(z.re);
    return {e * r_cos(z.im), e * r_sin(z.im)};
}
// x^w for real x > 0.
template <class R> Cx<R> rpow(R x, Cx<R> w) { return cx_exp(Cx<R>{w.re * r_log(x), w.im * r_log(x)}); }
// (e^z - 1)/z.
template <class R> Cx<R> phi1(Cx<R> z) {
    const R m2 = abs2(z);
    if (m2 < R(1e-8)) {
        Cx<R> one{R(1), R(0)};
        return one + z * (Cx<R>{R(0.5), R(0)} + z * (Cx<R>{R(1) / R(6), R(0)} + z * Cx<R>{R(1) / R(24), R(0)}));
    }
    Cx<R> em = cx_exp(z) - Cx<R>{R(1), R(0)};
    return em / z;
}

__float128 to_f128(const BigInt& n) { return strtoflt128(n.str().c_str(), nullptr); }

template <class R>
const std::vector<R>& em_tail_coeffs() {
    static const std::vector<R> table = [] {
        std::vector<R> t;
        for (int j = 1; j <= kEmTailTerms; ++j) {
            const BigRational c = exact::bernoulli_number(2 * j);
            const BigInt f = factorial(static_cast<unsigned>(2 * j));
            t.push_back(static_cast<R>(to_f128(numerator(c))) /
                        static_cast<R>(to_f128(denominator(c) * f)));
        }
        return t;
    }();
    return table;
}

// Euler-Maclaurin evaluation of zeta(s, v) (diff = false) or of
// zeta(s, v) - zeta(s, v2) with the pole terms cancelled (diff = true).
template <class R>
Cx<R> em_core(Cx<R> s, R v, R v2, bool diff, R rel_target) {
    const auto& tail_coef = em_tail_coeffs<R>();
    const double as = std::sqrt(static_cast<double>(abs2(s)));
    double need = std::max({10.0, std::fabs(static_cast<double>(s.im)),
                            (as + 2.0 * kEmTailTerms) / (2.0 * kPi) + 2.0});
    const Cx<R> one{R(1), R(0)};
    for (int attempt = 0;; ++attempt) {
        const int n_shift = std::max(1, static_cast<int>(std::ceil(need - static_cast<double>(v))));
        Cx<R> sum{R(0), R(0)};
        for (int k = 0; k < n_shift; ++k) {
            sum = sum + rpow(v + R(k), Cx<R>{-s.re, -s.im});
            if (diff) sum = sum - rpow(v2 + R(k), Cx<R>{-s.re, -s.im});
        }
        const R w1 = v + R(n_shift);
        const R w2 = v2 + R(n_shift);
        const Cx<R> ms{-s.re, -s.im};
        const Cx<R> w1ms = rpow(w1, ms);
        Cx<R> result = sum;
        if (!diff) {
            // w^(1-s)/(s-1)
            result = result + rpow(w1, one - s) / (s - one) + R(0.5) * w1ms;
        } else {
            // (w1^(1-s) - w2^(1-s))/(s-1), regular at s = 1:
            // = -e^((1-s) ln w2) (ln w1 - ln w2) phi1((1-s)(ln w1 - ln w2))
            const Cx<R> u = one - s;
            const R la = r_log(w1), lb = r_log(w2);
            const Cx<R> d{u.re * (la - lb), u.im * (la - lb)};
            const Cx<R> t = rpow(w2, u) * phi1(d);
            result = result - (la - lb) * t;
            result = result + R(0.5) * (w1ms - rpow(w2, ms));
        }
        // tail: sum_j B_2j/(2j)! (s)_(2j-1) w^(-s-2j+1)
        Cx<R> t1 = w1ms / Cx<R>{w1, R(0)};
        Cx<R> t2 = diff ? rpow(w2, ms) / Cx<R>{w2, R(0)} : Cx<R>{R(0), R(0)};
        const R iw1 = R(1) / (w1 * w1);
        const R iw2 = diff ? R(1) / (w2 * w2) : R(0);
        Cx<R> poch = s;
        R last_mag = R(0);
        bool first = true, ok = false;
        for (int j = 1; j <= kEmTailTerms; ++j) {
            const Cx<R> base = diff ? t1 - t2 : t1;
            const Cx<R> term = tail_coef[j - 1] * (poch * base);
            result = result + term;
            const R mag = abs2(term);
            if (mag == R(0)) {
                ok = true;  // terminating tail: s a nonpositive integer
                break;
            }
            if (mag <= rel_target * rel_target * abs2(result)) {
                ok = true;
                break;
            }
            if (!first && mag > last_mag) break;  // asymptotic divergence onset
            last_mag = mag;
            first = false;
            t1 = iw1 * t1;
            if (diff) t2 = iw2 * t2;
            const Cx<R> j1{s.re + R(2 * j - 1), s.im};
            const Cx<R> j2{s.re + R(2 * j), s.im};
            poch = poch * j1 * j2;
        }
        if (ok || attempt >= 4) return result;
        need *= 1.5;
    }
}

Complex em_double(const Complex& s, double v, double v2, bool diff) {
    const Cx<double> r = em_core<double>({s.real(), s.imag()}, v, v2, diff, 2e-17);
    return {r.re, r.im};
}

Complex em_wide(const Complex& s, double v, double v2, bool diff) {
    const Cx<__float128> r =
        em_core<__float128>({s.real(), s.imag()}, v, v2, diff, __float128(1e-20));
    return {static_cast<double>(r.re), static_cast<double>(r.im)};
}

bool is_quarter(double v) { return v > 0.0 && 4.0 * v == std::round(4.0 * v); }

Complex two_pow(const Complex& s) { return std::exp(s * kLn2); }

// zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s), for Re(s) < 0.
Complex riemann_reflect(const Complex& s) {
    const Complex u = 1.0 - s;
    return two_pow(s) * std::exp((s - 1.0) * std::log(kPi)) * sinpi_c(s / 2.0) * gamma(u) *
           em_double(u, 1.0, 0.0, false);
}

// beta(s) = (pi/2)^(s-1) cos(pi s/2) Gamma(1-s) beta(1-s), for Re(s) < 0.
Complex beta_reflect(const Complex& s) {
    const Complex u = 1.0 - s;
    const Complex beta_u = std::exp(-u * std::log(4.0)) * em_double(u, 0.25, 0.75, true);
    return std::exp((s - 1.0) * std::log(kPi / 2.0)) * cospi_c(s / 2.0) * gamma(u) * beta_u;
}

// Reflection route for v reduced into (0, 1], 4v integral.
Complex hurwitz_reflect_quarter(const Complex& s, double v0) {
    if (v0 == 1.0) return riemann_reflect(s);
    if (v0 == 0.5) return (two_pow(s) - 1.0) * riemann_reflect(s);
    const Complex four_s = std::exp(s * std::log(4.0));
    const Complex common = (four_s - two_pow(s)) * riemann_reflect(s);
    const Complex split = four_s * beta_reflect(s);
    if (v0 == 0.25) return 0.5 * (common + split);
    return 0.5 * (common - split);  // v0 == 0.75
}

}  // namespace

Complex hurwitz_zeta(const Complex& s, double v) {
    if (v <= 0.0) throw std::domain_error("hurwitz_zeta: require v > 0");
    if (s == Complex(1.0, 0.0)) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (s.real() >= kWideThreshold) return em_double(s, v, 0.0, false);
    if (s.real() >= kReflectThreshold || !is_quarter(v)) return em_wide(s, v, 0.0, false);
    // reduce v into (0, 1] and reflect
    Complex extra = 0.0;
    double v0 = v;
    while (v0 > 1.0) {
        v0 -= 1.0;
        extra -= cpow_principal(v0, -s);
    }
    return hurwitz_reflect_quarter(s, v0) + extra;
}

Complex hurwitz_zeta_diff(const Complex& s, double v1, double v2) {
    if (v1 <= 0.0 || v2 <= 0.0) throw std::domain_error("hurwitz_zeta_diff: require v > 0");
    if (s.real() >= kWideThreshold) return em_double(s, v1, v2, true);
    return em_wide(s, v1, v2, true);
}

Complex riemann_zeta(const Complex& s) { return hurwitz_zeta(s, 1.0); }

Complex eta(const Complex& s) {
    const Complex u = s - 1.0;
    if (std::abs(u) < 1e-7) {
        // eta = ln2 + (g ln2 - ln^2 2/2) u + (ln^3 2/6 - g ln^2 2/2 - g1 ln2) u^2 + ...
        constexpr double kGamma1 = -0.072815845483676724861;
        const double c1 = kEulerGamma * kLn2 - 0.5 * kLn2 * kLn2;
        const double c2 = kLn2 * kLn2 * kLn2 / 6.0 - 0.5 * kEulerGamma * kLn2 * kLn2 - kGamma1 * kLn2;
        return kLn2 + u * (c1 + u * c2);
    }
    return (1.0 - two_pow(1.0 - s)) * riemann_zeta(s);
}

Complex dirichlet_beta(const Complex& s) {
    if (s.real() < kReflectThreshold) return beta_reflect(s);
    return std::exp(-s * std::log(4.0)) * hurwitz_zeta_diff(s, 0.25, 0.75);
}

Complex alt_hurwitz_zeta(const Complex& s, double x) {
    if (!(x > 0.0 && x <= 1.0)) throw std::domain_error("alt_hurwitz_zeta: require 0 < x <= 1");
    return two_pow(-s) * hurwitz_zeta_diff(s, 0.5 * x, 0.5 * (x + 1.0));
}

Complex polylog_unit(const Complex& s, double x) {
    if (x == 1.0) {
        if (s.real() <= 1.0)
            throw std::domain_error("polylog_unit: Li_s(1) diverges for Re(s) <= 1");
        return riemann_zeta(s);
    }
    if (x == 0.5) return -eta(s);
    if (x == 0.25) return -two_pow(-s) * eta(s) + Complex(0.0, 1.0) * dirichlet_beta(s);
    if (x == 0.75) return -two_pow(-s) * eta(s) - Complex(0.0, 1.0) * dirichlet_beta(s);
    throw std::domain_error("polylog_unit: x must be one of 1/4, 1/2, 3/4, 1");
}

}  // namespace bernoulli
