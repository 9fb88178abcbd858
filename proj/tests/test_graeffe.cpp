#include <doctest.h>

#include <cmath>
#include <random>

#include "extremal/chebpoly.hpp"
#include "extremal/graeffe.hpp"
#include "extremal/spectral.hpp"

using namespace extremal;

namespace {

RationalPolynomial from_roots(const std::vector<mpq_class>& roots)
{
    RationalPolynomial p{mpq_class(1)};
    for (const auto& r : roots)
        p = p * RationalPolynomial(std::vector<mpq_class>{-r, mpq_class(1)});
    return p;
}

} // namespace

TEST_CASE("radicand on explicit roots")
{
    // roots 2, 1, 0, -1: fourth powers sum to 18
    const LeadingCoeffs c = leading_coeffs(from_roots({2, 1, 0, -1}));
    CHECK(graeffe_radicand(c) == 18);
    CHECK(graeffe_bound(c) == doctest::Approx(std::pow(18.0, 0.25)).epsilon(1e-14));

    RationalPolynomial zn{mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(1)};
    CHECK(graeffe_radicand(leading_coeffs(zn)) == 0);
    CHECK(graeffe_bound(leading_coeffs(zn)) == 0.0);

    LeadingCoeffs bad;
    bad.n = 4;
    bad.a4 = 1; // z^4 + 1: radicand -4
    CHECK_THROWS_AS(graeffe_bound(bad), parameter_error);
}

TEST_CASE("radicand equals the fourth power sum on random real-rooted polynomials")
{
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> num(-80, 80);
    std::uniform_int_distribution<int> deg(1, 10);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = trial < 450 ? 4 + trial % 7 : deg(rng);
        std::vector<mpq_class> roots;
        mpq_class power_sum = 0;
        double largest = -1e300;
        for (int i = 0; i < n; ++i) {
            const mpq_class r = rational(num(rng), 16);
            roots.push_back(r);
            power_sum += r * r * r * r;
            largest = std::max(largest, r.get_d());
        }
        const LeadingCoeffs c = leading_coeffs(from_roots(roots));
        CHECK(graeffe_radicand(c) == power_sum);
        CHECK(largest <= graeffe_bound(c) + 1e-12);
    }
}

TEST_CASE("closed-form leading coefficients of f_n")
{
    for (int m = 1; m <= 7; ++m)
        for (int n : divisors(2 * m + 1)) {
            if (n == 1)
                continue;
            for (int d = 2 * m + 2; d <= 2 * m + 8; ++d) {
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(d);
                const RationalPolynomial f = fn_monic(n, m, d);
                CHECK(f.is_monic());
                CHECK(f.degree() == n);
                CHECK(fn_leading_coeffs(n, m, d) == leading_coeffs(f));
                CHECK(graeffe_radicand(leading_coeffs(f)) * 16 == mpq_class(z0_radicand(n, m, d)));
            }
        }
    const LeadingCoeffs c = fn_leading_coeffs(5, 2, 6);
    CHECK(c.a1 == rational(-7, 2));
    CHECK(c.a2 == 0);
    CHECK(c.a3 == rational(25, 8));
    CHECK(c.a4 == rational(-5, 16));
}

TEST_CASE("z0 bound")
{
    CHECK(z0_radicand(5, 2, 6) == 1721);
    CHECK(z0_bound(5, 2, 6) == doctest::Approx(0.5 * std::pow(1721.0, 0.25)).epsilon(1e-14));
    // increasing in n
    CHECK(z0_bound(3, 4, 10) < z0_bound(9, 4, 10));
    CHECK_THROWS_AS(check_factor_index(1, 2), parameter_error);
    CHECK_THROWS_AS(check_factor_index(3, 2), parameter_error);
    CHECK_THROWS_AS(check_factor_index(7, 2), parameter_error);
    CHECK_NOTHROW(check_factor_index(5, 2));
}

TEST_CASE("exact root-bound inequality over the sweep")
{
    for (int m = 2; m <= 60; ++m)
        for (int d = 2 * m + 2; d <= 2 * m + 60; ++d) {
            CAPTURE(m);
            CAPTURE(d);
            CHECK(check_lemma10(m, d));
            CHECK(lemma10_margin(m, d) > 0.0);
        }
    CHECK(lemma10_margin(2, 6) == doctest::Approx(6.0 - 5.0 / 9.0 + 1.0 - std::pow(1721.0, 0.25)));
    CHECK_THROWS_AS(check_lemma10(1, 4), parameter_error);
    CHECK_THROWS_AS(check_lemma10(2, 5), parameter_error);
}

TEST_CASE("companion roots")
{
    const auto roots = companion_roots(from_roots({3, -2, rational(1, 2)}));
    REQUIRE(roots.size() == 3);
    CHECK(max_real_root(from_roots({3, -2, rational(1, 2)})) == doctest::Approx(3.0).epsilon(1e-14));
    // z^2 + 1 has no real root
    CHECK_THROWS_AS(max_real_root(RationalPolynomial{mpq_class(1), mpq_class(0), mpq_class(1)}), solver_failure);
}

TEST_CASE("factor roots respect the Graeffe bound and the lambda2 window")
{
    const int cases[][2] = {{1, 4}, {2, 6}, {3, 8}, {4, 12}, {7, 16}};
    for (const auto& c : cases) {
        CAPTURE(c[0]);
        CAPTURE(c[1]);
        const Theorem11Report r = verify_theorem11(c[0], c[1]);
        CHECK(r.ok());
        CHECK(r.lambda2_ok);
        CHECK(r.factor_consistency < factor_consistency_tol);
        CHECK(r.factors.size() + 1 == divisors(2 * c[0] + 1).size());
        for (const FactorCheck& f : r.factors) {
            CHECK(f.graeffe_ok);
            CHECK(f.upper_ok);
        }
    }
}

TEST_CASE("remaining spectrum after removing the factor roots")
{
    // Every eigenvalue not accounted for by d or an f_n root lies in [-3, 1].
    for (int m = 1; m <= 3; ++m) {
        const int d = 2 * m + 2;
        std::vector<double> ev = eigenvalues_dense(build_extremal_graph(m, d)).values;
        auto remove_one = [&](double value) {
            auto it = std::min_element(ev.begin(), ev.end(),
                                       [&](double a, double b) { return std::abs(a - value) < std::abs(b - value); });
            REQUIRE(std::abs(*it - value) < 1e-7);
            ev.erase(it);
        };
        remove_one(d);
        for (int n : divisors(2 * m + 1)) {
            if (n == 1)
                continue;
            for (const auto& root : companion_roots(fn_monic(n, m, d))) {
                REQUIRE(std::abs(root.imag()) < 1e-7);
                for (int k = 0; k < euler_phi(n); ++k)
                    remove_one(2.0 * root.real() - 1.0);
            }
        }
        for (double x : ev) {
            CHECK(x >= -3.0 - 1e-9);
            CHECK(x <= 1.0 + 1e-9);
        }
    }
}
