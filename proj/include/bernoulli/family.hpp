#ifndef BERNOULLI_FAMILY_HPP
#define BERNOULLI_FAMILY_HPP

#include "bernoulli/complex_ops.hpp"
#include "bernoulli/quadrature.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bernoulli {

enum class RouteTag { zeta, jensen, hasse, hurwitz, series, asymptotic };
std::string to_string(RouteTag route);
std::optional<RouteTag> route_from_name(std::string_view name);

/// One evaluation: value, the route that produced it, and a (crude,
/// overestimating) error bound. Immutable record.
struct EvalReport {
    Complex value;
    RouteTag route;
    double est_error;
};

// B(s) = -s zeta(1-s), entire, B(0) = 1.
Complex bernoulli_fn(const Complex& s);
// B(s,v) = -s zeta(1-s, v), v > 0, B(0,v) = 1.
Complex bernoulli_gen(const Complex& s, double v);
// B^c(s) = B(s) (2^(1-s) - 1).
Complex central_bernoulli(const Complex& s);
// B*(s) = (1 - 2^s) B(s); at integers half the Genocchi numbers.
Complex alternating_bernoulli(const Complex& s);
// G(s) = 2 (1 - 2^s) B(s).
Complex genocchi(const Complex& s);
// G(s,v) = 2^s (B(s,v/2) - B(s,(v+1)/2)), v > 0.
Complex genocchi_gen(const Complex& s, double v);
// E(s,v) = -G(s+1,v)/(s+1). The s = -1 gap is rejected here and closed
// in the tangent/secant specializations.
Complex euler_gen(const Complex& s, double v);
// E_tau(s) = (4^(s+1) - 2^(s+1)) B(s+1)/(s+1), E_tau(-1) = log 2.
Complex euler_tangent(const Complex& s);
// E_sigma(s) = 2 Im(Li_(-s)(i)), the classical Euler numbers at the
// even integers; E_sigma(-1) = pi/2.
Complex euler_secant(const Complex& s);
// B_sigma(s) = 2^(s-1)/(2^s-1) (B(s,3/4) - B(s,1/4)), s != 0.
Complex bernoulli_secant(const Complex& s);
// Extended zeta/Bernoulli/Euler family.
Complex extended_zeta(const Complex& s);
Complex extended_bernoulli(const Complex& s);
Complex extended_euler(const Complex& s);
// Andre and Seki functions plus their signed variants.
Complex andre(const Complex& s);
Complex andre_signed(const Complex& s);
Complex seki(const Complex& s);
Complex seki_signed(const Complex& s);

// tau(s) = tau^-s + (-tau)^-s with tau = 2 pi i.
Complex tau_factor(const Complex& s);
// |B(s) - B(1-s)/(1-s) tau(s) Gamma(s+1)| / (1 + |B(s)|).
double functional_equation_check(const Complex& s);
// Residual of the symmetric form B(1-s)(s/2)! pi^(-s/2) =
// B(s)((1-s)/2)! pi^(-(1-s)/2), normalized.
double symmetric_equation_residual(const Complex& s);
// xi(s) = B(s) Gamma(sigma+1)/pi^sigma, sigma = (1-s)/2; xi(s) = xi(1-s).
Complex xi_fn(const Complex& s);

// Hurwitz-Bernoulli route: requires Re(s) > 1 and 4v in {1,2,3,4}.
Complex hurwitz_bernoulli(const Complex& s, double v);

struct HasseResult {
    Complex value;
    double tail_estimate;
};
// Partial sum of the globally convergent Hasse double series.
HasseResult hasse_bernoulli(const Complex& s, double v, int terms);

// Taylor route B(s,v) = sum beta_n(v) s^n/n! with quadrature constants.
EvalReport bernoulli_fn_series(const Complex& s, double v = 1.0, int terms = 36);

// LB(s) = 1/s - (log zeta)'(1-s); LB(0) = -gamma. Odd integers >= 3 and
// zeros of B are rejected.
Complex log_derivative(const Complex& s);

// b_n = n! [s^n] log(sum beta_k s^k / k!), n = 1..count.
std::vector<double> bernoulli_cumulants(int count);

// Stirling-type asymptotics with remainder R_K from exact Bernoulli
// numbers. Near the zeros of cos(pi s/2) the unsigned envelope is
// returned instead of the vanishing signed value.
double asymptotic_bernoulli(double s, int k_terms);
double asymptotic_euler(double s, int k_terms);
double asymptotic_seki(double s, int k_terms);
// log Andre(s) to O(s^-7).
double log_andre_approx(double s);

// B^(n)(0) = beta_n, checked against -n gamma_(n-1).
double derivative_at_zero(int n);

// ---- routed evaluation for the CLI and the cross-check suites ----

enum class FunctionId {
    bernoulli,
    bernoulli_gen,
    central,
    alternating,
    genocchi,
    euler_tangent,
    euler_secant,
    bernoulli_secant,
    extended_bernoulli,
    extended_euler,
    andre,
    andre_signed,
    seki,
    seki_signed,
    xi,
    log_derivative,
};

const std::vector<std::pair<std::string, FunctionId>>& function_registry();
std::optional<FunctionId> function_from_name(std::string_view name);

struct EvalOptions {
    QuadratureSpec quad;
    int hasse_terms = 200;
    int series_terms = 36;
    int asym_terms = 5;
};

/// Evaluates a registry function along the requested route. Routes that
/// do not apply to a function throw std::invalid_argument; domain
/// violations inside the function throw std::domain_error.
EvalReport evaluate(FunctionId fn, const Complex& s, std::optional<double> v, RouteTag route,
                    const EvalOptions& opts = {});

}  // namespace bernoulli

#endif
