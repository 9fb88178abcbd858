#include "extremal/chebpoly.hpp"

#include <numeric>
#include <string>

#include "extremal/gmp_eigen.hpp"

namespace extremal {

namespace {

mpz_class binomial(long n, long k)
{
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

mpz_class power_of_two(unsigned long k)
{
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, k);
    return out;
}

void require_nonnegative(int n, const char* name)
{
    if (n < 0)
        throw parameter_error(std::string(name) + ": degree must be nonnegative, got " + std::to_string(n));
}

// (2T_n(z))^(g-1) * f_n(z) for the root of unity class with n = (2m+1)/g.
IntPolynomial root_factor(int n, int m, int d)
{
    const int g = (2 * m + 1) / n;
    return pow(mpz_class(2) * chebyshev_T(n), static_cast<unsigned>(g - 1)) * bracket_factor(n, m, d);
}

} // namespace

IntPolynomial chebyshev_T(int n)
{
    require_nonnegative(n, "chebyshev_T");
    if (n == 0)
        return IntPolynomial::constant(1);
    // T_n(z) = n/2 sum_k (-1)^k / (n-k) C(n-k, k) (2z)^(n-2k)
    std::vector<mpq_class> c(static_cast<std::size_t>(n) + 1, mpq_class(0));
    for (int k = 0; k <= n / 2; ++k) {
        mpq_class term(mpz_class(binomial(n - k, k) * power_of_two(static_cast<unsigned long>(n - 2 * k)) * n),
                       mpz_class(2 * (n - k)));
        term.canonicalize();
        if (k % 2 == 1)
            term = -term;
        c[static_cast<std::size_t>(n - 2 * k)] = term;
    }
    return to_integer(RationalPolynomial(std::move(c)), "chebyshev_T(" + std::to_string(n) + ")");
}

IntPolynomial chebyshev_U(int n)
{
    require_nonnegative(n, "chebyshev_U");
    // U_n(z) = sum_k (-1)^k C(n-k, k) (2z)^(n-2k)
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1, mpz_class(0));
    for (int k = 0; k <= n / 2; ++k) {
        mpz_class term = binomial(n - k, k) * power_of_two(static_cast<unsigned long>(n - 2 * k));
        c[static_cast<std::size_t>(n - 2 * k)] = (k % 2 == 1) ? mpz_class(-term) : term;
    }
    return IntPolynomial(std::move(c));
}

std::vector<int> divisors(int k)
{
    std::vector<int> out;
    for (int i = 1; i <= k; ++i)
        if (k % i == 0)
            out.push_back(i);
    return out;
}

int euler_phi(int n)
{
    int count = 0;
    for (int i = 1; i <= n; ++i)
        count += std::gcd(i, n) == 1 ? 1 : 0;
    return count;
}

IntPolynomial bracket_factor(int n, int m, int d)
{
    if (n < 1 || n % 2 == 0)
        throw parameter_error("bracket_factor: n must be odd and positive, got " + std::to_string(n));
    if ((2 * m + 1) % n != 0)
        throw parameter_error("bracket_factor: n=" + std::to_string(n) + " does not divide 2m+1=" +
                              std::to_string(2 * m + 1));
    check_family_params(m, d);
    const IntPolynomial t = chebyshev_T(n);
    const IntPolynomial z_minus_one{mpz_class(-1), mpz_class(1)};
    return mpz_class(1 - 2 * m) * t + mpz_class(2 * m - d) * divide_by_x(t) +
           mpz_class(2 * m + 1) * (z_minus_one * chebyshev_U(n - 1));
}

IntPolynomial char_poly_exact(int m, int d, RootProduct grouping)
{
    check_family_params(m, d);
    const int k = 2 * m + 1;

    IntPolynomial in_z = IntPolynomial::constant(1);
    if (grouping == RootProduct::by_divisor) {
        for (int n : divisors(k))
            in_z = in_z * pow(root_factor(n, m, d), static_cast<unsigned>(euler_phi(n)));
    } else {
        for (int j = 1; j <= k; ++j)
            in_z = in_z * root_factor(k / std::gcd(k, j), m, d);
    }

    // z = (x+1)/2
    const RationalPolynomial half_x_plus_half{rational(1, 2), rational(1, 2)};
    const RationalPolynomial in_x = compose(to_rational(in_z), half_x_plus_half);
    const IntPolynomial x_plus_one{mpz_class(1), mpz_class(1)};
    IntPolynomial p = pow(x_plus_one, static_cast<unsigned>((d - 2 * m) * k)) *
                      to_integer(in_x, "char_poly_exact(m=" + std::to_string(m) + ", d=" + std::to_string(d) + ")");

    if (p.degree() != k * (d + 1) || !p.is_monic())
        throw consistency_error("char_poly_exact: result is not monic of degree (2m+1)(d+1)");
    return p;
}

IntPolynomial char_poly_oracle(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > char_poly_oracle_max_vertices)
        throw parameter_error("char_poly_oracle: " + std::to_string(n) + " vertices exceeds the limit of " +
                              std::to_string(char_poly_oracle_max_vertices) + "; use char_poly_exact instead");

    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k,  M_0 = 0, c_n = 1.
    // A is 0/1 with sorted neighbor lists, so A*M is a sum of rows of M.
    using Matrix = Eigen::Matrix<mpq_class, Eigen::Dynamic, Eigen::Dynamic>;
    std::vector<mpq_class> c(static_cast<std::size_t>(n) + 1, mpq_class(0));
    c[static_cast<std::size_t>(n)] = 1;
    Matrix mk = Matrix::Constant(n, n, mpq_class(0));
    Matrix next(n, n);
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                mpq_class acc(0);
                for (int w : g.neighbors(i))
                    acc += mk(w, j);
                next(i, j) = acc;
            }
            next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        }
        mk.swap(next);
        mpq_class trace(0);
        for (int i = 0; i < n; ++i)
            for (int w : g.neighbors(i))
                trace += mk(w, i);
        mpq_class ck = -trace / k;
        if (ck.get_den() != 1)
            throw consistency_error("char_poly_oracle: coefficient c_" + std::to_string(n - k) + " = " + ck.get_str() +
                                    " is not an integer");
        c[static_cast<std::size_t>(n - k)] = ck;
    }
    return to_integer(RationalPolynomial(std::move(c)), "char_poly_oracle");
}

} // namespace extremal
