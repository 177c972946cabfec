#ifndef BERNOULLI_QUADRATURE_HPP
#define BERNOULLI_QUADRATURE_HPP

#include "bernoulli/complex_ops.hpp"

#include <stdexcept>

namespace bernoulli {

enum class QuadScheme { gauss_legendre, tanh_sinh };

/// Controls every sech^2-weighted integral. half_width is the
/// truncation Z of the infinite range; sech^2(pi Z) < 1e-18 already at
/// Z = 7, and the evaluators widen Z further on their own when the
/// power factor in the integrand grows with the index or with Re(s).
struct QuadratureSpec {
    double half_width = 7.0;
    int nodes = 400;
    QuadScheme scheme = QuadScheme::gauss_legendre;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadResult {
    Complex value;
    double est_error;  // node-doubling disagreement plus roundoff floor
};

struct QuadResultReal {
    double value;
    double est_error;
};

/// sigma_n(z) = Re(log(1/2 + iz)^n) via the binomial split in
/// a = log(z^2 + 1/4)/2 and b = arctan(2z).
double sigma_n(int n, double z);

// beta_n = pi int_0^inf sigma_n(z) sech^2(pi z) dz.
QuadResultReal bernoulli_constant_report(int n, const QuadratureSpec& spec = {});
double bernoulli_constant(int n, const QuadratureSpec& spec = {});

// gamma_n = -pi/(n+1) int_0^inf sigma_{n+1}(z) sech^2(pi z) dz.
QuadResultReal stieltjes_constant_report(int n, const QuadratureSpec& spec = {});
double stieltjes_constant(int n, const QuadratureSpec& spec = {});

// beta_r(v) for real index r > -1 and v >= 1/2.
QuadResultReal bernoulli_constant_general_report(double r, double v, const QuadratureSpec& spec = {});
double bernoulli_constant_general(double r, double v, const QuadratureSpec& spec = {});

// B(s,v) = 2 pi int (v - 1/2 + iz)^s / (e^-pi z + e^pi z)^2 dz, v >= 1/2.
QuadResult bernoulli_fn_jensen_report(const Complex& s, double v, const QuadratureSpec& spec = {});
Complex bernoulli_fn_jensen(const Complex& s, double v, const QuadratureSpec& spec = {});

// B^c(s) = 2 pi int (iz)^s / (e^-pi z + e^pi z)^2 dz, Re(s) > -1.
QuadResult central_bernoulli_jensen_report(const Complex& s, const QuadratureSpec& spec = {});
Complex central_bernoulli_jensen(const Complex& s, const QuadratureSpec& spec = {});

// Even-index classical Euler numbers from the Jensen-type integral; the
// node sum cancels ~n/2 digits, so it runs in binary128 throughout.
QuadResultReal euler_secant_jensen_report(int n, const QuadratureSpec& spec = {});
double euler_secant_jensen(int n, const QuadratureSpec& spec = {});

// Extended Euler function by its Jensen representation, s != -1.
QuadResult extended_euler_jensen_report(const Complex& s, const QuadratureSpec& spec = {});
Complex extended_euler_jensen(const Complex& s, const QuadratureSpec& spec = {});

// Riemann xi by Jensen's integral. The Gamma prefactor poles at
// s in {-2, -4, ...} are rejected.
QuadResult xi_jensen_report(const Complex& s, const QuadratureSpec& spec = {});
Complex xi_jensen(const Complex& s, const QuadratureSpec& spec = {});

// int_0^inf z^s sech^2(pi z) dz, Re(s) > -1 (secant decomposition).
QuadResult sech2_power_moment_report(const Complex& s, const QuadratureSpec& spec = {});

}  // namespace bernoulli

#endif
