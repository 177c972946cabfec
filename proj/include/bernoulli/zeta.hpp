#ifndef BERNOULLI_ZETA_HPP
#define BERNOULLI_ZETA_HPP

#include "bernoulli/complex_ops.hpp"

namespace bernoulli {

/// Hurwitz zeta with analytic continuation, Euler-Maclaurin with an
/// even-Bernoulli tail. The summation runs in binary64 for
/// Re(s) >= -3.5 and in binary128 below that (the partial sums cancel
/// catastrophically for very negative Re(s)); for Re(s) < -21 and v a
/// multiple of 1/4 the functional-equation form takes over, which keeps
/// the trivial zeros exact. Arbitrary v stays on the wide-precision
/// summation path, accurate to ~1e-12 relative down to Re(s) ~ -21.
///
/// Throws std::domain_error for v <= 0 and at the pole s = 1.
Complex hurwitz_zeta(const Complex& s, double v);

/// zeta(s, v1) - zeta(s, v2) with the 1/(s-1) poles cancelled
/// analytically, so s = 1 is a regular point.
Complex hurwitz_zeta_diff(const Complex& s, double v1, double v2);

/// zeta(s) = hurwitz_zeta(s, 1).
Complex riemann_zeta(const Complex& s);

/// Dirichlet eta (1 - 2^(1-s)) zeta(s); the s = 1 gap closes with log 2.
Complex eta(const Complex& s);

/// Dirichlet beta 4^(-s) (zeta(s,1/4) - zeta(s,3/4)); entire.
Complex dirichlet_beta(const Complex& s);

/// Alternating Hurwitz zeta 2^(-s)(zeta(s,x/2) - zeta(s,(x+1)/2)),
/// continued to all s; requires 0 < x <= 1.
Complex alt_hurwitz_zeta(const Complex& s, double x);

/// Li_s(e^(2 pi i x)) at the quarter points x in {1/4, 1/2, 3/4, 1}.
/// x = 1 needs Re(s) > 1; other x are rejected.
Complex polylog_unit(const Complex& s, double x);

}  // namespace bernoulli

#endif
