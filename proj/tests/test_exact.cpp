#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernoulli/exact.hpp"
#include "bernoulli/reference_tables.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

using namespace bernoulli;
using namespace bernoulli::exact;

namespace {

// Brute-force oracle: number of partitions of {0..n-1} into exactly k
// nonempty blocks, by enumerating restricted-growth strings.
long long stirling_brute(int n, int k) {
    if (n == 0 || k == 0) return (n == 0 && k == 0) ? 1 : 0;
    std::vector<int> label(n, 0);
    long long count = 0;
    const auto blocks = [&] {
        int mx = -1;
        for (int v : label) mx = std::max(mx, v);
        return mx + 1;
    };
    while (true) {
        bool valid = true;  // restricted growth: label[i] <= 1 + max(label[0..i-1])
        int mx = -1;
        for (int i = 0; i < n && valid; ++i) {
            if (label[i] > mx + 1) valid = false;
            mx = std::max(mx, label[i]);
        }
        if (valid && blocks() == k) ++count;
        int i = n - 1;
        while (i >= 0 && label[i] == k - 1) label[i--] = 0;
        if (i < 0) break;
        ++label[i];
    }
    return count;
}

// Brute-force oracle: number of down-up alternating permutations of [n]
// (a1 > a2 < a3 > ...), the classical zigzag count.
long long alternating_permutations_brute(int n) {
    if (n <= 1) return 1;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    long long count = 0;
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i) {
            if (i % 2 == 0) {
                ok = p[i] > p[i + 1];
            } else {
                ok = p[i] < p[i + 1];
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

RationalPolynomial poly_from_strings(std::span<const std::string_view> coeffs) {
    std::vector<BigRational> v;
    for (auto s : coeffs) v.emplace_back(std::string(s));
    return RationalPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("stirling set numbers against brute-force partition counts") {
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) CHECK(stirling_set(n, k) == BigInt(stirling_brute(n, k)));
    CHECK(stirling_set(0, 0) == 1);
    CHECK(stirling_set(4, 2) == 7);
    CHECK(stirling_set(5, 5) == 1);
}

TEST_CASE("worpitzky numbers") {
    CHECK(worpitzky_number(0, 0) == 1);
    CHECK(worpitzky_number(2, 1) == -3);
    CHECK(worpitzky_number(3, 3) == -6);
    // sanity: against the definition with independently computed pieces
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            BigInt expect = factorial(k) * BigInt(stirling_brute(n + 1, k + 1));
            if (k % 2 == 1) expect = -expect;
            CHECK(worpitzky_number(n, k) == expect);
        }
}

TEST_CASE("worpitzky transform of 1/(k+1) gives Bernoulli numbers") {
    std::vector<BigRational> a;
    for (unsigned k = 0; k <= 12; ++k) a.emplace_back(BigRational(1, BigInt(k) + 1));
    CHECK(worpitzky_transform(a, 2) == BigRational(1, 6));
    CHECK(worpitzky_transform(a, 3) == 0);
    for (unsigned n = 0; n <= 12; ++n) CHECK(worpitzky_transform(a, n) == bernoulli_number(n));
    std::vector<BigRational> e{1, 0, 0, 0, 0};
    for (unsigned n = 0; n <= 4; ++n) CHECK(worpitzky_transform(e, n) == 1);
}

TEST_CASE("generalized worpitzky polynomials") {
    std::vector<BigRational> harm;
    for (unsigned k = 0; k <= 6; ++k) harm.emplace_back(BigRational(1, BigInt(k) + 1));
    CHECK(worpitzky_poly(harm, 2) == RationalPolynomial({BigRational(1, 6), -1, 1}));
    CHECK(worpitzky_poly(harm, 2) == bernoulli_poly(2));

    std::vector<BigRational> unit{1, 0, 0};
    CHECK(worpitzky_poly(unit, 1) == RationalPolynomial({-1, 1}));  // x - 1

    // a_n = n+1 gives the binomial polynomial (x+1)^m.
    std::vector<BigRational> lin{1, 2, 3, 4};
    CHECK(worpitzky_poly(lin, 2) == binomial_power(1, 2));
    CHECK(worpitzky_poly(lin, 3) == binomial_power(1, 3));
}

TEST_CASE("bernoulli numbers: worpitzky sum, todd series, swiss-knife row agree") {
    CHECK(bernoulli_number(1) == BigRational(1, 2));
    CHECK(bernoulli_number(12) == BigRational(-691, 2730));
    CHECK(bernoulli_number(13) == 0);

    const auto todd = todd_bernoulli(61);
    CHECK(todd[1] == BigRational(1, 2));
    CHECK(todd[2] == BigRational(1, 6));
    CHECK(todd[4] == BigRational(-1, 30));
    for (unsigned n = 0; n <= 60; ++n) {
        CHECK(bernoulli_number(n) == todd[n]);
        CHECK(bernoulli_number(n) == family_from_swiss_knife(Family::bernoulli, n));
    }
}

TEST_CASE("bernoulli polynomials embed the numbers at x = 1") {
    for (unsigned n = 0; n <= 30; ++n) CHECK(bernoulli_poly(n)(1) == bernoulli_number(n));
    CHECK(bernoulli_poly(2) == RationalPolynomial({BigRational(1, 6), -1, 1}));
}

TEST_CASE("swiss-knife polynomials against the table") {
    for (unsigned n = 0; n <= 9; ++n) {
        auto expect = poly_from_strings(std::span(reference::kSwissKnifePoly[n].data(), n + 1));
        CHECK(swiss_knife_poly(n) == expect);
    }
    // parity and monicity
    for (unsigned n = 0; n <= 16; ++n) {
        const auto k = swiss_knife_poly(n);
        CHECK(k.coeff(n) == 1);
        for (int d = 0; d <= k.degree(); ++d)
            if ((static_cast<unsigned>(d) % 2) != (n % 2)) CHECK(k.coeff(d) == 0);
    }
}

TEST_CASE("swiss-knife worpitzky representation is coefficient-exact") {
    CHECK(swiss_knife_worpitzky(0) == RationalPolynomial({1}));
    CHECK(swiss_knife_worpitzky(2) == RationalPolynomial({-1, 0, 1}));
    CHECK(swiss_knife_worpitzky(5) == RationalPolynomial({0, 25, 0, -10, 0, 1}));
    for (unsigned n = 0; n <= 16; ++n) CHECK(swiss_knife_worpitzky(n) == swiss_knife_poly(n));
}

TEST_CASE("swiss-knife application rows") {
    CHECK(family_from_swiss_knife(Family::euler, 6) == -61);
    CHECK(family_from_swiss_knife(Family::genocchi, 8) == 17);
    CHECK(family_from_swiss_knife(Family::springer, 3) == 11);

    for (unsigned n = 0; n < reference::kEuler.size(); ++n) CHECK(euler_number(n) == reference::kEuler[n]);
    for (unsigned n = 0; n < reference::kGenocchi.size(); ++n) {
        CHECK(genocchi_number(n) == reference::kGenocchi[n]);
        CHECK(family_from_swiss_knife(Family::genocchi, n) == BigRational(genocchi_number(n)));
    }
    for (unsigned n = 0; n <= 12; n += 2)
        CHECK(family_from_swiss_knife(Family::euler_secant, n) == BigRational(euler_number(n)));
    for (unsigned n = 1; n <= 13; n += 2)
        CHECK(family_from_swiss_knife(Family::euler_tangent, n) == BigRational(euler_tangent_number(n)));
    for (unsigned n = 2; n <= 14; n += 2)
        CHECK(family_from_swiss_knife(Family::bernoulli_tangent, n) == bernoulli_number(n));
    for (unsigned n = 1; n <= 13; n += 2)
        CHECK(family_from_swiss_knife(Family::bernoulli_secant, n) == bernoulli_secant_number(n));
    for (unsigned n = 0; n <= 12; ++n)
        CHECK(family_from_swiss_knife(Family::euler_zeta, n) == euler_zeta_number(n));
    CHECK_THROWS_AS((void)family_from_swiss_knife(Family::euler_secant, 3), std::domain_error);
    CHECK_THROWS_AS((void)family_from_swiss_knife(Family::euler_tangent, 4), std::domain_error);
}

TEST_CASE("springer numbers: row magnitude equals the series oracle") {
    for (unsigned n = 0; n < reference::kSpringer.size(); ++n) {
        CHECK(springer_number(n) == reference::kSpringer[n]);
        CHECK(family_from_swiss_knife(Family::springer, n) == BigRational(springer_number(n)));
    }
    // raw row sign is period 4: +,+,-,-
    for (unsigned n = 0; n <= 11; ++n) {
        BigRational raw = swiss_knife_poly(n)(BigRational(1, 2)) * BigRational(BigInt(1) << n);
        const bool negative = (n % 4 == 2) || (n % 4 == 3);
        CHECK((raw < 0) == negative);
    }
}

TEST_CASE("central bernoulli numbers and polynomials") {
    for (unsigned n = 0; n < reference::kCentralBernoulli.size(); ++n)
        CHECK(central_bernoulli_number(n) == BigRational(std::string(reference::kCentralBernoulli[n])));
    CHECK(central_bernoulli_number(4) == BigRational(7, 15));
    CHECK(central_bernoulli_number(6) == BigRational(-31, 21));

    for (unsigned n = 0; n <= 9; ++n) {
        auto expect = poly_from_strings(std::span(reference::kCentralPoly[n].data(), n + 1));
        CHECK(central_bernoulli_poly(n) == expect);
    }
    // 2^n B_n(1/2) route agrees with the Hasse sum route
    for (unsigned n = 0; n <= 16; ++n) {
        BigRational via_poly = bernoulli_poly(n)(BigRational(1, 2)) * BigRational(BigInt(1) << n);
        CHECK(central_bernoulli_number(n) == via_poly);
    }
    // parity of B^c_n(x) equals parity of n
    for (unsigned n = 0; n <= 12; ++n) {
        const auto p = central_bernoulli_poly(n);
        for (int d = 0; d <= p.degree(); ++d)
            if ((static_cast<unsigned>(d) % 2) != (n % 2)) CHECK(p.coeff(d) == 0);
    }
}

TEST_CASE("genocchi and fubini polynomials") {
    // G_0 is the zero polynomial; G_n has degree n-1 for n >= 1.
    for (unsigned n = 0; n <= 8; ++n) {
        auto expect = poly_from_strings(std::span(reference::kGenocchiPoly[n].data(), n == 0 ? 1 : n));
        CHECK(genocchi_poly(n) == expect);
    }
    CHECK(genocchi_poly(3) == RationalPolynomial({0, 3, -3}));
    CHECK(genocchi_poly(0).is_zero());

    // twice the gap between Bernoulli and central Bernoulli polynomials
    for (unsigned n = 0; n <= 12; ++n) {
        RationalPolynomial gap = bernoulli_poly(n) - central_bernoulli_poly(n);
        gap *= BigRational(2);
        CHECK(genocchi_poly(n) == gap);
    }

    CHECK(fubini_poly(2) == RationalPolynomial({0, -1, 2}));
    // int_0^1 F_n = B_n, and the reflected integrand gives the same value
    for (unsigned n = 0; n <= 12; ++n) {
        const auto F = fubini_poly(n);
        const auto I = F.integral();
        CHECK(I(1) - I(0) == bernoulli_number(n));
        const auto Fr = F.substitute_linear(-1, 1);  // F_n(1-x)
        const auto Ir = Fr.integral();
        CHECK(Ir(1) - Ir(0) == bernoulli_number(n));
    }
}

TEST_CASE("andre numbers by boustrophedon match brute-force zigzag counts") {
    for (int n = 0; n <= 8; ++n) CHECK(andre_number(n) == BigInt(alternating_permutations_brute(n)));
    for (unsigned n = 0; n < reference::kAndre.size(); ++n) CHECK(andre_number(n) == reference::kAndre[n]);
    CHECK(andre_number(7) == 272);
    CHECK(andre_signed_number(3) == -2);
}

TEST_CASE("seki and euler-zeta tables are reproduced exactly") {
    for (unsigned n = 0; n <= 30; ++n) {
        CHECK(seki_number(n) == BigRational(std::string(reference::kSeki[n])));
        CHECK(euler_zeta_number(n) == BigRational(std::string(reference::kEulerZeta[n])));
    }
    CHECK(seki_number(13) == BigRational(BigInt(35135945), BigInt(67100672)));
    CHECK(euler_zeta_number(6) == BigRational(61, 720));
    CHECK(seki_signed_number(0) == 1);
    CHECK(seki_signed_number(3) == BigRational(-3, 56));
}

TEST_CASE("integer family golden lists") {
    for (unsigned n = 0; n < reference::kEulerTangent.size(); ++n)
        CHECK(euler_tangent_number(n) == reference::kEulerTangent[n]);
    for (unsigned n = 0; n < reference::kExtendedEuler.size(); ++n)
        CHECK(extended_euler_number(n) == reference::kExtendedEuler[n]);
    for (unsigned n = 0; n < reference::kBernoulliSecant.size(); ++n)
        CHECK(bernoulli_secant_number(n) == BigRational(std::string(reference::kBernoulliSecant[n])));
    for (unsigned n = 0; n < reference::kExtendedBernoulli.size(); ++n)
        CHECK(extended_bernoulli_number(n) == BigRational(std::string(reference::kExtendedBernoulli[n])));
    // alternating Bernoulli numbers are half the Genocchi numbers
    for (unsigned n = 0; n <= 14; ++n) {
        CHECK(alternating_bernoulli_number(n) == BigRational(genocchi_number(n), 2));
        BigRational via_b = BigRational(2 * (BigInt(1) - (BigInt(1) << n))) * bernoulli_number(n);
        CHECK(BigRational(genocchi_number(n)) == via_b);
        CHECK(BigRational(genocchi_poly(n)(1)) == via_b);
    }
    // Seki interpolates |extended Bernoulli| for n >= 2 (n = 1 differs: 1/2 vs 1)
    for (unsigned n = 2; n <= 10; ++n) {
        BigRational e = extended_bernoulli_number(n);
        if (e < 0) e = -e;
        CHECK(seki_number(n) == e);
    }
    CHECK(seki_number(1) == BigRational(1, 2));
    CHECK(extended_bernoulli_number(1) == 1);
}

TEST_CASE("andre consistency with swiss-knife columns") {
    for (unsigned n = 0; n <= 6; ++n) {
        BigRational sec = family_from_swiss_knife(Family::euler_secant, 2 * n);
        if (sec < 0) sec = -sec;
        CHECK(sec == BigRational(andre_number(2 * n)));
        BigRational tan = family_from_swiss_knife(Family::euler_tangent, 2 * n + 1);
        if (tan < 0) tan = -tan;
        CHECK(tan == BigRational(andre_number(2 * n + 1)));
    }
}

TEST_CASE("eulerian and stirling-fubini evaluations") {
    CHECK(eulerian_polynomial_at(4, -1) == 0);
    CHECK(eulerian_polynomial_at(5, -1) == 16);
    CHECK(stirling_fubini_p(3, 1) == -2);
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(eulerian_polynomial_at(n, -1) == BigRational(euler_tangent_number(n)));
        CHECK(stirling_fubini_p(n, 1) == BigRational(euler_tangent_number(n)));
    }
}

TEST_CASE("half-shift identity holds exactly") {
    CHECK(half_shift_identity_check(1));
    CHECK(half_shift_identity_check(6));
    CHECK(half_shift_identity_check(13));
    for (unsigned n = 0; n <= 20; ++n) CHECK(half_shift_identity_check(n));
}

TEST_CASE("appell derivative property") {
    for (unsigned n = 1; n <= 12; ++n) {
        RationalPolynomial expected_c = central_bernoulli_poly(n - 1);
        expected_c *= BigRational(BigInt(n));
        CHECK(central_bernoulli_poly(n).derivative() == expected_c);
        RationalPolynomial expected_k = swiss_knife_poly(n - 1);
        expected_k *= BigRational(BigInt(n));
        CHECK(swiss_knife_poly(n).derivative() == expected_k);
    }
}

TEST_CASE("triangles expose well-formed rows") {
    const auto st = stirling_triangle(6);
    REQUIRE(st.rows.size() == 7);
    for (unsigned n = 0; n < st.rows.size(); ++n) CHECK(st.rows[n].size() == n + 1);
    const auto wt = worpitzky_triangle(5);
    CHECK(wt.at(2, 1) == -3);
}

TEST_CASE("cumulant coefficient golden rows") {
    const auto& rows = cumulant_coefficient_rows();
    REQUIRE(rows.size() == 6);
    CHECK(rows[1] == std::vector<long long>{-1, 1});
    CHECK(rows[3] == std::vector<long long>{-6, 12, -4, -3, 1});
}
