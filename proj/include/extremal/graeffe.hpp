#ifndef EXTREMAL_GRAEFFE_HPP
#define EXTREMAL_GRAEFFE_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "extremal/polynomial.hpp"

namespace extremal {

/// a_{n-1}, ..., a_{n-4} of a monic polynomial of degree n. Coefficients
/// below x^0 (n < 4) read as zero.
struct LeadingCoeffs
{
    int n = 0;
    mpq_class a1; ///< a_{n-1}
    mpq_class a2; ///< a_{n-2}
    mpq_class a3; ///< a_{n-3}
    mpq_class a4; ///< a_{n-4}

    friend bool operator==(const LeadingCoeffs&, const LeadingCoeffs&) = default;
};

LeadingCoeffs leading_coeffs(const RationalPolynomial& monic);

/// -4a_{n-4} + 4a_{n-3}a_{n-1} + 2a_{n-2}^2 - 4a_{n-2}a_{n-1}^2 + a_{n-1}^4,
/// the sum of fourth powers of the roots written in the leading coefficients.
mpq_class graeffe_radicand(const LeadingCoeffs& c);

/// Fourth root of graeffe_radicand: an upper bound on the largest root of a
/// real-rooted monic polynomial with these leading coefficients. Throws
/// parameter_error on a negative radicand.
double graeffe_bound(const LeadingCoeffs& c);

/// Throws parameter_error unless n is odd, 3 <= n <= 2m+1 and n | 2m+1.
void check_factor_index(int n, int m);

/// Closed-form leading coefficients of f_n(z) / 2^n.
LeadingCoeffs fn_leading_coeffs(int n, int m, int d);

/// f_n(z) / 2^n as an exact monic polynomial (from the Chebyshev expansion).
RationalPolynomial fn_monic(int n, int m, int d);

/// d^4 + 4d^3 - (8m-2)d^2 + 4d + 8m^2 - 8m + 6n - 5
mpz_class z0_radicand(int n, int m, int d);
/// (1/2) z0_radicand(n, m, d)^{1/4}
double z0_bound(int n, int m, int d);

/// (d^4+4d^3-(8m-2)d^2+4d+8m^2+4m+1)^{1/4} < d - (2m+1)/(d+3) + 1, decided
/// exactly by comparing the radicand with the fourth power of the rational
/// right-hand side. Requires d >= 2m+2 >= 6.
bool check_lemma10(int m, int d);

/// Right-hand side minus left-hand side of the check_lemma10 inequality, in
/// floating point (for reporting only).
double lemma10_margin(int m, int d);

/// Roots of a monic polynomial: eigenvalues of its balanced companion matrix.
std::vector<std::complex<double>> companion_roots(const RationalPolynomial& monic);

/// Imaginary parts at or below this count as real.
inline constexpr double real_root_tol = 1e-9;

/// Largest real root, Newton-polished in long double. Throws solver_failure
/// if the root of largest real part is not real.
double max_real_root(const RationalPolynomial& monic);

struct FactorCheck
{
    int n = 0;
    double z0_bound = 0.0;
    double max_root = 0.0;
    bool graeffe_ok = false; ///< max_root <= z0_bound
    bool upper_ok = false;   ///< 2 max_root - 1 < d - (2m+1)/(d+3)
};

struct Theorem11Report
{
    int m = 0;
    int d = 0;
    std::vector<FactorCheck> factors; ///< one per divisor n != 1 of 2m+1
    double lambda2 = 0.0;
    double window_lower = 0.0;
    double window_upper = 0.0;
    bool lambda2_ok = false;
    /// |lambda2 - (2 z_max - 1)| with z_max the largest root over all f_n
    double factor_consistency = 0.0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

inline constexpr double factor_consistency_tol = 1e-8;

/// Root bounds for every f_n factor plus the lambda2 window check.
Theorem11Report verify_theorem11(int m, int d);

} // namespace extremal

#endif
