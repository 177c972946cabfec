#ifndef BERNOULLI_RATIONAL_HPP
#define BERNOULLI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace bernoulli {

// Exact arithmetic types. BigRational is always stored normalized:
// gcd(|num|, den) = 1 and den >= 1.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const BigRational& r) { return boost::multiprecision::denominator(r); }

// Renders "p/q" in lowest terms, integers without the "/1".
inline std::string to_string(const BigRational& r) { return r.str(); }
inline std::string to_string(const BigInt& n) { return n.str(); }

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

/// Dense polynomial with exact rational coefficients, ascending degree,
/// no trailing zeros. The zero polynomial is the empty coefficient list.
class RationalPolynomial {
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> coeffs);

    static RationalPolynomial constant(const BigRational& c);

    // degree() is -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    // Coefficient of x^k; zero beyond the stored degree.
    BigRational coeff(std::size_t k) const;

    BigRational operator()(const BigRational& x) const;  // Horner

    RationalPolynomial derivative() const;
    // Antiderivative with zero constant term.
    RationalPolynomial integral() const;

    // p(a*x + b), expanded exactly.
    RationalPolynomial substitute_linear(const BigRational& a, const BigRational& b) const;

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator-=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const BigRational& c);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
        a += b;
        return a;
    }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
        a -= b;
        return a;
    }
    friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& c) {
        a *= c;
        return a;
    }

    bool operator==(const RationalPolynomial& other) const { return coeffs_ == other.coeffs_; }

    // Ascending rendering, e.g. "-1 + 6x^2 - 4x^3", "(7/3)x - (10/3)x^3 + x^5".
    std::string str() const;

  private:
    void normalize();
    std::vector<BigRational> coeffs_;
};

// (x + c)^n expanded exactly.
RationalPolynomial binomial_power(const BigRational& c, unsigned n);

// Coefficients r of the formal reciprocal 1/sum(c_k z^k), c_0 != 0,
// through z^(count-1).
std::vector<BigRational> series_reciprocal(const std::vector<BigRational>& c, std::size_t count);

}  // namespace bernoulli

#endif
