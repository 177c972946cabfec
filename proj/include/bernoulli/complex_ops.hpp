#ifndef BERNOULLI_COMPLEX_OPS_HPP
#define BERNOULLI_COMPLEX_OPS_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace bernoulli {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;
inline constexpr double kCatalan = 0.91596559417721901505460351493238411;

// sin(pi x), cos(pi x) with argument reduction; half-integer x give
// exact zeros in the vanishing component.
inline void sincospi(double x, double& s, double& c) {
    const double r = x - 2.0 * std::round(x / 2.0);  // r in [-1, 1]
    const int q = static_cast<int>(std::lround(2.0 * r));
    const double t = r - 0.5 * q;  // t in [-1/4, 1/4]
    const double st = std::sin(kPi * t);
    const double ct = std::cos(kPi * t);
    switch (q) {
        case 0: s = st, c = ct; break;
        case 1: s = ct, c = -st; break;
        case -1: s = -ct, c = st; break;
        default: s = -st, c = -ct; break;  // q = +-2
    }
}

inline double sinpi(double x) {
    double s, c;
    sincospi(x, s, c);
    return s;
}

inline double cospi(double x) {
    double s, c;
    sincospi(x, s, c);
    return c;
}

// sin(pi z) = sin(pi x) cosh(pi y) + i cos(pi x) sinh(pi y)
inline Complex sinpi_c(const Complex& z) {
    double s, c;
    sincospi(z.real(), s, c);
    if (z.imag() == 0.0) return {s, 0.0};
    return {s * std::cosh(kPi * z.imag()), c * std::sinh(kPi * z.imag())};
}

inline Complex cospi_c(const Complex& z) {
    double s, c;
    sincospi(z.real(), s, c);
    if (z.imag() == 0.0) return {c, 0.0};
    return {c * std::cosh(kPi * z.imag()), -s * std::sinh(kPi * z.imag())};
}

inline bool is_real_integer(const Complex& z) {
    return z.imag() == 0.0 && z.real() == std::round(z.real());
}

/// Principal-branch power exp(expo * Log base), Im(Log) in (-pi, pi].
/// 0^expo is 0 for Re(expo) > 0 and a domain error otherwise.
inline Complex cpow_principal(const Complex& base, const Complex& expo) {
    if (base == Complex(0.0, 0.0)) {
        if (expo.real() > 0.0) return {0.0, 0.0};
        throw std::domain_error("cpow_principal: 0 base requires Re(exponent) > 0");
    }
    if (expo == Complex(0.0, 0.0)) return {1.0, 0.0};
    return std::exp(expo * std::log(base));
}

// (e^z - 1)/z, stable near z = 0.
inline Complex expm1_over(const Complex& z) {
    if (std::abs(z) < 1e-4) {
        // 1 + z/2 + z^2/6 + z^3/24 (next term ~ |z|^4/120 < 1e-18)
        return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
    }
    return (std::exp(z) - 1.0) / z;
}

}  // namespace bernoulli

#endif
