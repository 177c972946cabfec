#include "bernoulli/exact.hpp"

#include <mutex>
#include <stdexcept>

namespace bernoulli::exact {

namespace {

// Grow-on-demand triangle cache guarded by a mutex; rows are immutable
// once published.
class TriangleCache {
  public:
    template <class Step>
    std::vector<BigInt> row(unsigned n, Step step) {
        std::lock_guard<std::mutex> lock(mtx_);
        while (rows_.size() <= n) {
            const unsigned m = static_cast<unsigned>(rows_.size());
            std::vector<BigInt> r(m + 1);
            step(m, rows_, r);
            rows_.push_back(std::move(r));
        }
        return rows_[n];
    }

  private:
    std::mutex mtx_;
    std::vector<std::vector<BigInt>> rows_;
};

std::vector<BigInt> stirling_row(unsigned n) {
    static TriangleCache cache;
    return cache.row(n, [](unsigned m, const auto& rows, std::vector<BigInt>& r) {
        r[0] = (m == 0) ? 1 : 0;
        for (unsigned k = 1; k <= m; ++k) {
            const BigInt same = (k < rows[m - 1].size()) ? rows[m - 1][k] : BigInt(0);
            r[k] = BigInt(k) * same + rows[m - 1][k - 1];
        }
    });
}

std::vector<BigInt> eulerian_row(unsigned n) {
    static TriangleCache cache;
    return cache.row(n, [](unsigned m, const auto& rows, std::vector<BigInt>& r) {
        if (m == 0) {
            r[0] = 1;
            return;
        }
        for (unsigned k = 0; k <= m; ++k) {
            BigInt left = (k < rows[m - 1].size()) ? rows[m - 1][k] : BigInt(0);
            BigInt up = (k >= 1 && k - 1 < rows[m - 1].size()) ? rows[m - 1][k - 1] : BigInt(0);
            r[k] = BigInt(k + 1) * left + BigInt(m - k) * up;
        }
    });
}

// Boustrophedon rows T(n,k) = T(n,k-1) + T(n-1,n-k) seeded with T(0,0)=1;
// the Andre number is the last entry of each row.
std::vector<BigInt> entringer_row(unsigned n) {
    static TriangleCache cache;
    return cache.row(n, [](unsigned m, const auto& rows, std::vector<BigInt>& r) {
        if (m == 0) {
            r[0] = 1;
            return;
        }
        r[0] = 0;
        for (unsigned k = 1; k <= m; ++k) r[k] = r[k - 1] + rows[m - 1][m - k];
    });
}

BigInt pow2(unsigned n) { return BigInt(1) << n; }

BigRational alpha(unsigned n) {
    if (n == 0) throw std::domain_error("alpha_0 is undefined (4^0 - 2^0 = 0)");
    const BigInt p2 = pow2(n);
    return BigRational(BigInt(n), p2 * p2 - p2);  // n / (4^n - 2^n)
}

}  // namespace

BigInt stirling_set(unsigned n, unsigned k) {
    if (k > n) throw std::domain_error("stirling_set: require k <= n");
    return stirling_row(n)[k];
}

IntegerTriangle stirling_triangle(unsigned max_row) {
    IntegerTriangle t;
    for (unsigned n = 0; n <= max_row; ++n) t.rows.push_back(stirling_row(n));
    return t;
}

BigInt worpitzky_number(unsigned n, unsigned k) {
    if (k > n) throw std::domain_error("worpitzky_number: require k <= n");
    BigInt w = factorial(k) * stirling_set(n + 1, k + 1);
    return (k % 2 == 0) ? w : -w;
}

IntegerTriangle worpitzky_triangle(unsigned max_row) {
    IntegerTriangle t;
    for (unsigned n = 0; n <= max_row; ++n) {
        std::vector<BigInt> row(n + 1);
        for (unsigned k = 0; k <= n; ++k) row[k] = worpitzky_number(n, k);
        t.rows.push_back(std::move(row));
    }
    return t;
}

BigRational worpitzky_transform(std::span<const BigRational> a, unsigned n) {
    if (a.size() <= n) throw std::domain_error("worpitzky_transform: need len(a) > n");
    BigRational acc = 0;
    for (unsigned k = 0; k <= n; ++k) acc += BigRational(worpitzky_number(n, k)) * a[k];
    return acc;
}

RationalPolynomial worpitzky_poly(std::span<const BigRational> a, unsigned m) {
    if (a.size() <= m) throw std::domain_error("worpitzky_poly: need len(a) > m");
    RationalPolynomial acc;
    for (unsigned n = 0; n <= m; ++n) {
        if (a[n] == 0) continue;
        RationalPolynomial inner;
        for (unsigned k = 0; k <= n; ++k) {
            RationalPolynomial t = binomial_power(BigRational(-(BigInt(k) + 1)), m);
            t *= BigRational(binomial(n, k)) * (k % 2 == 0 ? 1 : -1);
            inner += t;
        }
        inner *= a[n];
        acc += inner;
    }
    return acc;
}

BigRational bernoulli_number(unsigned m) {
    static std::vector<BigRational> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= m) {
        const unsigned mm = static_cast<unsigned>(cache.size());
        BigRational b = 0;
        for (unsigned n = 0; n <= mm; ++n) {
            BigInt inner = 0;
            for (unsigned k = 0; k <= n; ++k) {
                BigInt t = binomial(n, k) * ((k == 0) ? BigInt(mm == 0 ? 1 : 0) : boost::multiprecision::pow(BigInt(k), mm));
                inner += ((mm - k) % 2 == 0) ? t : -t;
            }
            b += BigRational(inner, BigInt(n + 1));
        }
        cache.push_back(b);
    }
    return cache[m];
}

RationalPolynomial bernoulli_poly(unsigned n) {
    std::vector<BigRational> a(n + 1);
    for (unsigned k = 0; k <= n; ++k) a[k] = BigRational(1, BigInt(k) + 1);
    return worpitzky_poly(a, n);
}

std::vector<BigRational> todd_bernoulli(std::size_t count) {
    if (count == 0) throw std::domain_error("todd_bernoulli: count >= 1");
    // (1 - e^-z)/z = sum (-1)^k z^k/(k+1)!
    std::vector<BigRational> den(count);
    for (std::size_t k = 0; k < count; ++k) {
        den[k] = BigRational(BigInt(1), factorial(static_cast<unsigned>(k + 1)));
        if (k % 2 == 1) den[k] = -den[k];
    }
    std::vector<BigRational> r = series_reciprocal(den, count);
    for (std::size_t n = 0; n < count; ++n) r[n] *= factorial(static_cast<unsigned>(n));
    return r;
}

RationalPolynomial swiss_knife_poly(unsigned n) {
    static std::vector<RationalPolynomial> cache{RationalPolynomial::constant(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        const unsigned m = static_cast<unsigned>(cache.size());
        const RationalPolynomial& prev = cache.back();
        // K_m has coefficients only at x^(m-2k); push each one up a
        // degree with the Appell factor m/(m-2k), then fix the constant
        // term for even m so the Euler-number column stays consistent.
        std::vector<BigRational> c(m + 1);
        BigRational even_sum = 0;
        for (unsigned k = 0; 2 * k <= m - 1; ++k) {
            const unsigned deg = m - 1 - 2 * k;  // degree in K_{m-1}
            BigRational lifted = prev.coeff(deg) * BigInt(m) / BigInt(deg + 1);
            c[deg + 1] = lifted;
            even_sum += lifted;
        }
        if (m % 2 == 0) c[0] = -even_sum;
        cache.push_back(RationalPolynomial(std::move(c)));
    }
    return cache[n];
}

RationalPolynomial swiss_knife_worpitzky(unsigned n) {
    static const int period[8] = {1, 1, 1, 0, -1, -1, -1, 0};
    RationalPolynomial acc;
    for (unsigned k = 0; k <= n; ++k) {
        const int alpha_k = period[k % 8];
        if (alpha_k == 0) continue;
        RationalPolynomial inner;
        for (unsigned v = 0; v <= k; ++v) {
            RationalPolynomial t = binomial_power(BigRational(BigInt(v) + 1), n);  // (x+v+1)^n
            t *= BigRational(binomial(k, v)) * (v % 2 == 0 ? 1 : -1);
            inner += t;
        }
        inner *= BigRational(BigInt(alpha_k), pow2(k / 2));
        acc += inner;
    }
    return acc;
}

BigRational family_from_swiss_knife(Family which, unsigned n) {
    const auto K_at = [](int idx, const BigRational& x) -> BigRational {
        if (idx < 0) return 1;  // K_{-1}(x) = 1 by convention
        return swiss_knife_poly(static_cast<unsigned>(idx))(x);
    };
    switch (which) {
        case Family::euler_zeta: {
            BigRational k = K_at(static_cast<int>(n), BigRational(n % 2));
            if (k < 0) k = -k;
            return k / factorial(n);
        }
        case Family::euler:
            return K_at(static_cast<int>(n), BigRational(n % 2));
        case Family::euler_secant:
            if (n % 2 != 0) throw std::domain_error("euler_secant row: even index required");
            return K_at(static_cast<int>(n), 0);
        case Family::euler_tangent:
            if (n % 2 != 1) throw std::domain_error("euler_tangent row: odd index required");
            return K_at(static_cast<int>(n), 1);
        case Family::bernoulli:
            if (n == 0) return 1;
            return K_at(static_cast<int>(n) - 1, 1) * alpha(n);
        case Family::bernoulli_tangent:
            if (n == 0 || n % 2 != 0) throw std::domain_error("bernoulli_tangent row: even index >= 2 required");
            return K_at(static_cast<int>(n) - 1, 1) * alpha(n);
        case Family::bernoulli_secant:
            if (n % 2 != 1) throw std::domain_error("bernoulli_secant row: odd index required");
            return K_at(static_cast<int>(n) - 1, 0) * alpha(n);
        case Family::extended_bernoulli:
            if (n == 0) throw std::domain_error("extended_bernoulli row: index >= 1 required");
            return K_at(static_cast<int>(n) - 1, BigRational((n - 1) % 2)) * alpha(n);
        case Family::genocchi: {
            if (n == 0) return 0;
            // The table's -K_{n-1}(-1) n/2^(n-1) reproduces the Genocchi
            // list only at n = 1; even rows come out negated, so the sign
            // is corrected by (-1)^n to match G_n = 2(1-2^n)B_n.
            BigRational g = K_at(static_cast<int>(n) - 1, -1) * BigInt(n) / pow2(n - 1);
            return (n % 2 == 0) ? g : -g;
        }
        case Family::springer: {
            // K_n(1/2) 2^n carries a period-4 sign; the Springer numbers
            // themselves are positive (boustrophedon-series oracle).
            BigRational s = K_at(static_cast<int>(n), BigRational(1, 2)) * pow2(n);
            return s < 0 ? BigRational(-s) : s;
        }
    }
    throw std::domain_error("family_from_swiss_knife: unknown family");
}

BigRational central_bernoulli_number(unsigned n) {
    BigRational acc = 0;
    for (unsigned j = 0; j <= n; ++j) {
        BigInt inner = 0;
        for (unsigned k = 0; k <= j; ++k) {
            BigInt t = binomial(j, k) * boost::multiprecision::pow(BigInt(2 * k + 1), n);
            inner += (k % 2 == 0) ? t : -t;
        }
        acc += BigRational(inner, BigInt(j + 1));
    }
    return acc;
}

RationalPolynomial central_bernoulli_poly(unsigned n) {
    std::vector<BigRational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        c[n - k] = BigRational(binomial(n, k)) * central_bernoulli_number(k);
    return RationalPolynomial(std::move(c));
}

RationalPolynomial genocchi_poly(unsigned n) {
    const RationalPolynomial b = bernoulli_poly(n);
    const BigRational half(1, 2);
    RationalPolynomial g = b.substitute_linear(half, 0) - b.substitute_linear(half, half);
    g *= BigRational(pow2(n));
    return g;
}

RationalPolynomial fubini_poly(unsigned n) {
    std::vector<BigRational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        BigInt t = factorial(k) * stirling_set(n, k);
        c[k] = ((n - k) % 2 == 0) ? BigRational(t) : BigRational(-t);
    }
    return RationalPolynomial(std::move(c));
}

BigInt andre_number(unsigned n) {
    const auto row = entringer_row(n);
    return row.back();
}

BigRational euler_zeta_number(unsigned n) {
    return BigRational(andre_number(n), factorial(n));
}

BigRational seki_number(unsigned n) {
    if (n == 0) return 1;
    const BigInt p2 = pow2(n);
    return BigRational(BigInt(n) * andre_number(n - 1), p2 * p2 - p2);
}

BigInt euler_number(unsigned n) {
    if (n % 2 == 1) return 0;
    const BigInt a = andre_number(n);
    return (n / 2) % 2 == 0 ? a : -a;
}

BigInt euler_tangent_number(unsigned n) {
    if (n == 0) return 1;
    if (n % 2 == 0) return 0;
    const BigInt a = andre_number(n);
    return ((n - 1) / 2) % 2 == 0 ? a : -a;
}

BigInt extended_euler_number(unsigned n) {
    return euler_number(n) + euler_tangent_number(n);
}

BigInt genocchi_number(unsigned n) {
    BigRational g = BigRational(2 * (BigInt(1) - pow2(n))) * bernoulli_number(n);
    if (denominator(g) != 1) throw std::logic_error("genocchi_number: non-integer value");
    return numerator(g);
}

BigRational alternating_bernoulli_number(unsigned n) {
    return BigRational(genocchi_number(n), 2);
}

BigRational bernoulli_secant_number(unsigned n) {
    if (n % 2 == 0) return 0;
    return family_from_swiss_knife(Family::bernoulli_secant, n);
}

BigRational extended_bernoulli_number(unsigned n) {
    if (n == 0) return 1;  // B_0 + B^sigma_0 with the sigma_0 = 0 convention
    return bernoulli_number(n) + bernoulli_secant_number(n);
}

BigInt andre_signed_number(unsigned n) {
    const BigInt a = andre_number(n);
    return n % 2 == 0 ? a : -a;
}

BigRational seki_signed_number(unsigned n) {
    const BigRational s = seki_number(n);
    return n % 2 == 0 ? s : -s;
}

BigInt springer_number(unsigned n) {
    // n! [z^n] 1/(cos z - sin z)
    std::vector<BigRational> f(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        BigRational t(BigInt(1), factorial(k));
        if (k % 2 == 0) {
            f[k] = ((k / 2) % 2 == 0) ? t : -t;
        } else {
            f[k] = (((k - 1) / 2) % 2 == 0) ? -t : t;
        }
    }
    const std::vector<BigRational> r = series_reciprocal(f, n + 1);
    BigRational s = r[n] * factorial(n);
    if (denominator(s) != 1) throw std::logic_error("springer_number: non-integer value");
    return numerator(s);
}

BigRational eulerian_polynomial_at(unsigned n, const BigRational& x) {
    const auto row = eulerian_row(n);
    BigRational acc = 0;
    for (std::size_t k = row.size(); k-- > 0;) acc = acc * x + BigRational(row[k]);
    return acc;
}

BigRational stirling_fubini_p(unsigned n, const BigRational& x) {
    BigRational acc = 0;
    BigRational xp = 1;
    for (unsigned k = 0; k <= n; ++k) {
        BigRational t = BigRational(stirling_set(n, k) * factorial(k)) * xp;
        BigInt m2 = boost::multiprecision::pow(BigInt(-2), n - k);
        acc += t * BigRational(m2);
        xp *= x;
    }
    return acc;
}

bool half_shift_identity_check(unsigned n) {
    const BigRational half(1, 2);
    BigRational lhs = BigRational(pow2(n)) * bernoulli_poly(n)(1);
    BigRational rhs = 0;
    BigRational p = 1;
    for (unsigned k = 0; k <= n; ++k) {
        rhs += BigRational(binomial(n, k)) * p * bernoulli_poly(k)(half);
        p *= 2;
    }
    return lhs == rhs;
}

const std::vector<std::vector<long long>>& cumulant_coefficient_rows() {
    static const std::vector<std::vector<long long>> rows = {
        {1},
        {-1, 1},
        {2, -3, 1},
        {-6, 12, -4, -3, 1},
        {24, -60, 20, 30, -5, -10, 1},
        {-120, 360, -120, -270, 30, 120, 30, -6, -15, -10, 1},
    };
    return rows;
}

}  // namespace bernoulli::exact
