#ifndef BERNOULLI_EXACT_HPP
#define BERNOULLI_EXACT_HPP

#include "bernoulli/rational.hpp"

#include <span>
#include <vector>

namespace bernoulli::exact {

/// Triangle of exact integers; row n holds n+1 entries.
struct IntegerTriangle {
    std::vector<std::vector<BigInt>> rows;
    const BigInt& at(unsigned n, unsigned k) const { return rows.at(n).at(k); }
};

// Stirling set number {n, k}, via S(n,k) = k S(n-1,k) + S(n-1,k-1).
BigInt stirling_set(unsigned n, unsigned k);
IntegerTriangle stirling_triangle(unsigned max_row);

// W(n,k) = (-1)^k k! {n+1, k+1}.
BigInt worpitzky_number(unsigned n, unsigned k);
IntegerTriangle worpitzky_triangle(unsigned max_row);

// sum_k W(n,k) a_k; requires a.size() > n.
BigRational worpitzky_transform(std::span<const BigRational> a, unsigned n);

// Generalized Worpitzky transform: the m-th polynomial
//   W_m(a) = sum_{n<=m} a_n sum_k (-1)^k C(n,k) (x-k-1)^m.
// a = (1/(n+1)) yields the Bernoulli polynomial B_m(x).
RationalPolynomial worpitzky_poly(std::span<const BigRational> a, unsigned m);

// Bernoulli number by the finite Worpitzky double sum; B_1 = +1/2.
BigRational bernoulli_number(unsigned m);

// B_n(x), exact.
RationalPolynomial bernoulli_poly(unsigned n);

// First `count` Maclaurin numbers n! [z^n] z/(1 - e^-z).
std::vector<BigRational> todd_bernoulli(std::size_t count);

// Swiss-knife polynomials K_n(x): Appell sequence of the Euler numbers,
// monic with integer coefficients and the parity of n.
RationalPolynomial swiss_knife_poly(unsigned n);
// Same polynomials through the Worpitzky-type representation with the
// period-8 weights (1,1,1,0,-1,-1,-1,0) / 2^floor(k/2).
RationalPolynomial swiss_knife_worpitzky(unsigned n);

enum class Family {
    euler_zeta,
    euler,
    euler_secant,
    euler_tangent,
    bernoulli,
    bernoulli_tangent,
    bernoulli_secant,
    extended_bernoulli,
    genocchi,
    springer,
};

// One row of the Swiss-knife applications table, alpha_n = n/(4^n - 2^n).
// Throws std::domain_error for an index outside the row's domain.
BigRational family_from_swiss_knife(Family which, unsigned n);

// Central Bernoulli numbers 2^n B_n(1/2) by the terminating Hasse sum,
// and their Appell polynomials.
BigRational central_bernoulli_number(unsigned n);
RationalPolynomial central_bernoulli_poly(unsigned n);

// G_n(x) = 2^n (B_n(x/2) - B_n((x+1)/2)).
RationalPolynomial genocchi_poly(unsigned n);
// F_n(x) = sum_k (-1)^(n-k) k! {n,k} x^k; int_0^1 F_n = B_n.
RationalPolynomial fubini_poly(unsigned n);

// Andre numbers 1, 1, 1, 2, 5, 16, 61, ... by the Seidel-Entringer
// boustrophedon recurrence.
BigInt andre_number(unsigned n);
// Z_n = A_n / n!.
BigRational euler_zeta_number(unsigned n);
// S_0 = 1; S_n = n A_{n-1} / (4^n - 2^n).
BigRational seki_number(unsigned n);

// Classical (secant) Euler numbers 1, 0, -1, 0, 5, ...
BigInt euler_number(unsigned n);
// Euler tangent numbers 1, 1, 0, -2, 0, 16, ... (values of A_n(-1)).
BigInt euler_tangent_number(unsigned n);
// Extended Euler numbers 2, 1, -1, -2, 5, 16, ...
BigInt extended_euler_number(unsigned n);
// Genocchi numbers 0, -1, -1, 0, 1, ... as exact integers.
BigInt genocchi_number(unsigned n);
// Alternating Bernoulli numbers G_n / 2.
BigRational alternating_bernoulli_number(unsigned n);
// Bernoulli secant numbers 0, 1/2, 0, -3/56, ...
BigRational bernoulli_secant_number(unsigned n);
// Extended Bernoulli numbers; index 0 is 1 by the B^sigma_0 = 0 convention.
BigRational extended_bernoulli_number(unsigned n);
// Signed variants (-1)^n A_n and (-1)^n S_n.
BigInt andre_signed_number(unsigned n);
BigRational seki_signed_number(unsigned n);
// Springer numbers 1, 1, 3, 11, 57, ...: n! [z^n] 1/(cos z - sin z).
BigInt springer_number(unsigned n);

// Eulerian polynomial A_n evaluated at x, exact.
BigRational eulerian_polynomial_at(unsigned n, const BigRational& x);
// P_n(x) = sum_k (-2)^(n-k) {n,k} k! x^k; P_n(1) equals the Euler
// tangent numbers.
BigRational stirling_fubini_p(unsigned n, const BigRational& x);

// Checks 2^n B_n(1) = sum_k C(n,k) 2^k B_k(1/2) exactly.
bool half_shift_identity_check(unsigned n);

/// Golden rows of the Bernoulli-cumulant coefficient triangle, one flat
/// row per order n = 1..6, monomials in the partition order
/// (1^n), (1^(n-2) 2), ... used by the documentation tests.
const std::vector<std::vector<long long>>& cumulant_coefficient_rows();

}  // namespace bernoulli::exact

#endif
