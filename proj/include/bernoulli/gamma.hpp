#ifndef BERNOULLI_GAMMA_HPP
#define BERNOULLI_GAMMA_HPP

#include "bernoulli/complex_ops.hpp"

namespace bernoulli {

/// Gamma(z) by Lanczos approximation, reflection for Re(z) < 1/2.
/// Throws std::domain_error at the poles z = 0, -1, -2, ...
Complex gamma(const Complex& z);

/// Digamma psi(z) = d/dz log Gamma(z): upward recurrence to Re(z) >= 10,
/// then the even-Bernoulli asymptotic series. Poles as for gamma.
Complex digamma(const Complex& z);

}  // namespace bernoulli

#endif
