#include "bernoulli/rational.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace bernoulli {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: product of i+1 consecutive integers
    }
    return result;
}

BigInt factorial(unsigned n) {
    static std::vector<BigInt> cache{1};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) cache.push_back(cache.back() * BigInt(cache.size()));
    return cache[n];
}

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c) {
    return RationalPolynomial({c});
}

BigRational RationalPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
}

BigRational RationalPolynomial::operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * BigInt(k);
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::integral() const {
    if (coeffs_.empty()) return {};
    std::vector<BigRational> v(coeffs_.size() + 1);
    v[0] = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k + 1] = coeffs_[k] / BigInt(k + 1);
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::substitute_linear(const BigRational& a, const BigRational& b) const {
    RationalPolynomial acc;
    // Horner in the polynomial ring: acc = acc*(a x + b) + c_k.
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        std::vector<BigRational> next(acc.coeffs_.size() + 1);
        for (std::size_t k = 0; k < acc.coeffs_.size(); ++k) {
            next[k + 1] += acc.coeffs_[k] * a;
            next[k] += acc.coeffs_[k] * b;
        }
        next.empty() ? next.push_back(coeffs_[i]) : void(next[0] += coeffs_[i]);
        acc = RationalPolynomial(std::move(next));
    }
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& ck : coeffs_) ck *= c;
    return *this;
}

void RationalPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string RationalPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigRational& c = coeffs_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        BigRational mag = neg ? BigRational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const bool frac = denominator(mag) != 1;
        if (k == 0) {
            out << (frac ? "(" + to_string(mag) + ")" : to_string(mag));
        } else {
            if (mag != 1) out << (frac ? "(" + to_string(mag) + ")" : to_string(mag));
            out << "x";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

RationalPolynomial binomial_power(const BigRational& c, unsigned n) {
    std::vector<BigRational> v(n + 1);
    BigRational cp = 1;
    for (std::size_t j = 0; j <= n; ++j) {
        // coefficient of x^{n-j} is C(n,j) c^j
        v[n - j] = BigRational(binomial(n, static_cast<unsigned>(j))) * cp;
        cp *= c;
    }
    return RationalPolynomial(std::move(v));
}

std::vector<BigRational> series_reciprocal(const std::vector<BigRational>& c, std::size_t count) {
    if (c.empty() || c[0] == 0) throw std::invalid_argument("series_reciprocal: constant term must be nonzero");
    std::vector<BigRational> r(count);
    if (count == 0) return r;
    r[0] = BigRational(1) / c[0];
    for (std::size_t n = 1; n < count; ++n) {
        BigRational acc = 0;
        for (std::size_t k = 1; k <= n && k < c.size(); ++k) acc += c[k] * r[n - k];
        r[n] = -acc / c[0];
    }
    return r;
}

}  // namespace bernoulli
