#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "extremal/chebpoly.hpp"
#include "extremal/spectral.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

IntPolynomial ints(std::initializer_list<long> ascending)
{
    std::vector<mpz_class> c;
    for (long v : ascending)
        c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

const IntPolynomial z = ints({0, 1});

} // namespace

TEST_CASE("polynomial arithmetic basics")
{
    const IntPolynomial p = ints({1, 2, 3});
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p * ints({-1, 1}) == ints({-1, -1, -1, 3}));
    CHECK(pow(ints({1, 1}), 3) == ints({1, 3, 3, 1}));
    CHECK(compose(ints({0, 0, 1}), ints({1, 1})) == ints({1, 2, 1}));
    CHECK(derivative(ints({5, 3, 0, 2})) == ints({3, 0, 6}));
    CHECK(divide_by_x(ints({0, 4, 5})) == ints({4, 5}));
    CHECK_THROWS_AS(divide_by_x(ints({1, 4})), consistency_error);
    const auto [q, rem] = divide_linear(ints({-6, 11, -6, 1}), mpz_class(1));
    CHECK(q == ints({6, -5, 1}));
    CHECK(rem == 0);
    CHECK(p(mpz_class(2)) == 17);
    CHECK(p.evaluate(0.5) == doctest::Approx(2.75));
    CHECK(to_string(ints({-1, 0, 1})) == "x^2 - 1");
    CHECK(to_string(ints({3, -1})) == "-x + 3");
    CHECK_THROWS_AS(to_integer(RationalPolynomial{rational(1, 2)}), consistency_error);
}

TEST_CASE("all_roots_below is exact for real-rooted input")
{
    const IntPolynomial p = ints({-6, 11, -6, 1}); // roots 1, 2, 3
    CHECK(all_roots_below(p, rational(3, 1) + rational(1, 1000000)));
    CHECK_FALSE(all_roots_below(p, mpq_class(3)));
    CHECK_FALSE(all_roots_below(p, rational(5, 2)));
}

TEST_CASE("Chebyshev base cases and small degrees")
{
    CHECK(chebyshev_T(0) == ints({1}));
    CHECK(chebyshev_T(1) == z);
    CHECK(chebyshev_U(0) == ints({1}));
    CHECK(chebyshev_U(1) == ints({0, 2}));
    CHECK(chebyshev_T(3) == ints({0, -3, 0, 4}));
    CHECK(chebyshev_T(5) == ints({0, 5, 0, -20, 0, 16}));
    CHECK_THROWS_AS(chebyshev_T(-1), parameter_error);
    CHECK_THROWS_AS(chebyshev_U(-2), parameter_error);
}

TEST_CASE("explicit sums agree with the three-term recurrences")
{
    for (int n = 0; n <= 25; ++n) {
        CAPTURE(n);
        CHECK(chebyshev_T(n) == IntPolynomial(oracle::chebyshev_recurrence(n, false)));
        CHECK(chebyshev_U(n) == IntPolynomial(oracle::chebyshev_recurrence(n, true)));
        if (n >= 1) {
            mpz_class lead;
            mpz_ui_pow_ui(lead.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
            CHECK(chebyshev_T(n).leading() == lead);
        }
    }
}

TEST_CASE("Chebyshev identities as exact polynomial identities")
{
    const IntPolynomial two_z = ints({0, 2});
    for (int k = 1; k < 25; ++k) {
        CAPTURE(k);
        CHECK(chebyshev_T(k + 1) == two_z * chebyshev_T(k) - chebyshev_T(k - 1));
        CHECK(chebyshev_U(k + 1) == two_z * chebyshev_U(k) - chebyshev_U(k - 1));
    }
    for (int n = 1; n <= 25; ++n)
        CHECK(derivative(chebyshev_T(n)) == mpz_class(n) * chebyshev_U(n - 1));
}

TEST_CASE("Chebyshev polynomials at cos(theta)")
{
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    for (int trial = 0; trial < 100; ++trial) {
        const double theta = angle(rng);
        const int n = trial % 12;
        const double c = std::cos(theta);
        CHECK(std::abs(chebyshev_T(n).evaluate(c) - std::cos(n * theta)) < 1e-12);
        CHECK(std::abs(chebyshev_U(n).evaluate(c) * std::sin(theta) - std::sin((n + 1) * theta)) < 1e-12);
    }
}

TEST_CASE("bracket factor")
{
    for (int m = 1; m <= 4; ++m) {
        for (int d = 2 * m + 2; d <= 2 * m + 5; ++d) {
            // n = 1: 2z - d - 1
            CHECK(bracket_factor(1, m, d) == ints({-(d + 1), 2}));
            for (int n : divisors(2 * m + 1)) {
                const IntPolynomial b = bracket_factor(n, m, d);
                mpz_class lead;
                mpz_ui_pow_ui(lead.get_mpz_t(), 2, static_cast<unsigned long>(n));
                CHECK(b.degree() == n);
                CHECK(b.leading() == lead);
            }
        }
    }
    // sympy expansion of (-1 + (-2)/z) T_3 + 3 (z-1) U_2
    CHECK(bracket_factor(3, 1, 4) == ints({9, 0, -20, 8}));
    CHECK_THROWS_AS(bracket_factor(2, 1, 4), parameter_error);
    CHECK_THROWS_AS(bracket_factor(5, 1, 4), parameter_error);
}

TEST_CASE("number theory helpers")
{
    CHECK(divisors(15) == std::vector<int>{1, 3, 5, 15});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(15) == 8);
}

TEST_CASE("characteristic polynomial of G(1,4) matches a frozen independent expansion")
{
    // sympy Matrix.charpoly on the adjacency matrix built from the set definitions
    const IntPolynomial expected = ints({-100, -495, -546, 1329, 3966, 2520, -3404, -6813, -4176, -259, 846, 291,
                                         -42, -30, 0, 1});
    CHECK(char_poly_exact(1, 4) == expected);
    CHECK(char_poly_oracle(build_extremal_graph(1, 4)) == expected);
}

TEST_CASE("closed form equals Faddeev-LeVerrier")
{
    const int cases[][2] = {{1, 4}, {1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 8}};
    for (const auto& c : cases) {
        CAPTURE(c[0]);
        CAPTURE(c[1]);
        const IntPolynomial exact = char_poly_exact(c[0], c[1]);
        CHECK(exact.degree() == (2 * c[0] + 1) * (c[1] + 1));
        CHECK(exact.is_monic());
        CHECK(exact[exact.degree() - 1] == 0);
        CHECK(exact[exact.degree() - 2] == -static_cast<long>(build_extremal_graph(c[0], c[1]).edge_count()));
        CHECK(exact == char_poly_oracle(build_extremal_graph(c[0], c[1])));
    }
}

TEST_CASE("divisor grouping equals the per-root product")
{
    for (int m = 1; m <= 4; ++m)
        for (int d = 2 * m + 2; d <= 2 * m + 3; ++d)
            CHECK(char_poly_exact(m, d, RootProduct::by_divisor) == char_poly_exact(m, d, RootProduct::per_root));
}

TEST_CASE("d is the largest root")
{
    for (int m = 1; m <= 3; ++m) {
        for (int d = 2 * m + 2; d <= 2 * m + 4; ++d) {
            const IntPolynomial p = char_poly_exact(m, d);
            const auto [q, rem] = divide_linear(p, mpz_class(d));
            CHECK(rem == 0);
            CHECK(q(mpz_class(d)) != 0);
            CHECK(all_roots_below(q, mpq_class(d)));
        }
    }
}

TEST_CASE("lambda2 window checked exactly on the characteristic polynomial")
{
    // After removing x - d, every root is below d - (2m+1)/(d+3) and at least
    // one root reaches d - (2m+1)/(d+1).
    for (int m = 1; m <= 3; ++m) {
        for (int d = 2 * m + 2; d <= 2 * m + 4; ++d) {
            CAPTURE(m);
            CAPTURE(d);
            const auto [q, rem] = divide_linear(char_poly_exact(m, d), mpz_class(d));
            REQUIRE(rem == 0);
            CHECK(all_roots_below(q, mpq_class(d) - rational(2 * m + 1, d + 3)));
            CHECK_FALSE(all_roots_below(q, mpq_class(d) - rational(2 * m + 1, d + 1)));
        }
    }
}

TEST_CASE("characteristic polynomial vanishes on the dense spectrum")
{
    for (int m = 1; m <= 2; ++m) {
        const int d = 2 * m + 2;
        const IntPolynomial p = char_poly_exact(m, d);
        const Spectrum s = eigenvalues_dense(build_extremal_graph(m, d));
        for (double lambda : s.values) {
            long double scale = 0.0L, power = 1.0L;
            for (const auto& c : p.coeffs()) {
                scale += std::abs(c.get_d()) * power;
                power *= std::abs(static_cast<long double>(lambda));
            }
            CHECK(std::abs(p.evaluate<long double>(lambda)) <= 1e-9L * scale);
        }
    }
}

TEST_CASE("oracle on small graphs and its size guard")
{
    CHECK(char_poly_oracle(path_graph(2)) == ints({-1, 0, 1}));
    // (x-4)(x+1)^4
    CHECK(char_poly_oracle(complete_graph(5)) == ints({-4, 1}) * pow(ints({1, 1}), 4));
    CHECK_THROWS_AS(char_poly_oracle(complete_graph(129)), parameter_error);
}
