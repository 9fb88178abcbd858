#include "extremal/graeffe.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "extremal/chebpoly.hpp"
#include "extremal/spectral.hpp"

namespace extremal {

LeadingCoeffs leading_coeffs(const RationalPolynomial& monic)
{
    if (!monic.is_monic())
        throw parameter_error("leading_coeffs: polynomial is not monic");
    const int n = monic.degree();
    return {n, monic[n - 1], monic[n - 2], monic[n - 3], monic[n - 4]};
}

mpq_class graeffe_radicand(const LeadingCoeffs& c)
{
    const mpq_class a1_sq = c.a1 * c.a1;
    return mpq_class(-4 * c.a4 + 4 * c.a3 * c.a1 + 2 * c.a2 * c.a2 - 4 * c.a2 * a1_sq + a1_sq * a1_sq);
}

double graeffe_bound(const LeadingCoeffs& c)
{
    const mpq_class r = graeffe_radicand(c);
    if (sgn(r) < 0)
        throw parameter_error("graeffe_bound: negative radicand " + r.get_str() +
                              " (input is not real-rooted or the coefficients are wrong)");
    return std::sqrt(std::sqrt(r.get_d()));
}

void check_factor_index(int n, int m)
{
    if (m < 1 || n < 3 || n > 2 * m + 1 || n % 2 == 0 || (2 * m + 1) % n != 0)
        throw parameter_error("factor index n=" + std::to_string(n) + " must be an odd divisor of 2m+1=" +
                              std::to_string(2 * m + 1) + " with n >= 3");
}

LeadingCoeffs fn_leading_coeffs(int n, int m, int d)
{
    check_factor_index(n, m);
    check_family_params(m, d);
    return {n,
            rational(-(d + 1), 2),
            rational(2 * m + 1 - n, 4),
            rational(d * n + n - 4 * m - 2, 8),
            rational((n - 4 * m - 2) * (n - 3), 32)};
}

RationalPolynomial fn_monic(int n, int m, int d)
{
    RationalPolynomial p = to_rational(bracket_factor(n, m, d));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return p * rational(1, scale);
}

mpz_class z0_radicand(int n, int m, int d)
{
    check_factor_index(n, m);
    check_family_params(m, d);
    const mpz_class dd(d), mm(m);
    return mpz_class(dd * dd * dd * dd + 4 * dd * dd * dd - (8 * mm - 2) * dd * dd + 4 * dd + 8 * mm * mm - 8 * mm +
                     6 * n - 5);
}

double z0_bound(int n, int m, int d) { return 0.5 * std::sqrt(std::sqrt(z0_radicand(n, m, d).get_d())); }

namespace {

void check_lemma10_domain(int m, int d)
{
    if (m < 2 || d < 2 * m + 2)
        throw parameter_error("check_lemma10 requires d >= 2m+2 >= 6 (got m=" + std::to_string(m) +
                              ", d=" + std::to_string(d) + ")");
}

} // namespace

bool check_lemma10(int m, int d)
{
    check_lemma10_domain(m, d);
    const mpz_class radicand = z0_radicand(2 * m + 1, m, d);
    // rhs = ((d+1)(d+3) - (2m+1)) / (d+3) > 0, so compare fourth powers
    const mpz_class num = mpz_class(d + 1) * (d + 3) - (2 * m + 1);
    const mpz_class den(d + 3);
    const mpz_class num4 = num * num * num * num;
    const mpz_class den4 = den * den * den * den;
    return radicand * den4 < num4;
}

double lemma10_margin(int m, int d)
{
    check_lemma10_domain(m, d);
    const double lhs = std::sqrt(std::sqrt(z0_radicand(2 * m + 1, m, d).get_d()));
    return d - (2.0 * m + 1.0) / (d + 3.0) + 1.0 - lhs;
}

namespace {

// Parlett-Reinsch diagonal balancing with radix 2.
void balance(Eigen::MatrixXd& a)
{
    const Eigen::Index n = a.rows();
    constexpr double radix = 2.0;
    constexpr double sq_radix = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0)
                continue;
            const double s = c + r;
            double f = 1.0;
            double g = r / radix;
            while (c < g) {
                f *= radix;
                c *= sq_radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sq_radix;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

} // namespace

std::vector<std::complex<double>> companion_roots(const RationalPolynomial& monic)
{
    if (!monic.is_monic())
        throw parameter_error("companion_roots: polynomial is not monic");
    const int n = monic.degree();
    if (n < 1)
        return {};
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i)
        c(i, i - 1) = 1.0;
    for (int k = 0; k < n; ++k)
        c(k, n - 1) = -monic[k].get_d();
    balance(c);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
    if (solver.info() != Eigen::Success)
        throw solver_failure("companion eigensolver did not converge on a " + std::to_string(n) + "x" +
                             std::to_string(n) + " matrix");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double max_real_root(const RationalPolynomial& monic)
{
    const std::vector<std::complex<double>> roots = companion_roots(monic);
    if (roots.empty())
        throw parameter_error("max_real_root: constant polynomial");
    const auto top = std::max_element(roots.begin(), roots.end(),
                                      [](const auto& a, const auto& b) { return a.real() < b.real(); });
    if (std::abs(top->imag()) > real_root_tol) {
        std::ostringstream msg;
        msg << "max_real_root: root of largest real part " << *top << " is not real";
        throw solver_failure(msg.str());
    }
    const RationalPolynomial dp = derivative(monic);
    long double x = top->real();
    for (int it = 0; it < 50; ++it) {
        const long double fx = monic.evaluate<long double>(x);
        const long double dfx = dp.evaluate<long double>(x);
        if (dfx == 0.0L)
            break;
        const long double step = fx / dfx;
        x -= step;
        if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(x)))
            break;
    }
    return static_cast<double>(x);
}

Theorem11Report verify_theorem11(int m, int d)
{
    check_family_params(m, d);
    Theorem11Report r;
    r.m = m;
    r.d = d;
    const double target = d - (2.0 * m + 1.0) / (d + 3.0);
    double z_max = -1e300;

    auto fail = [&r](const std::string& what) {
        std::ostringstream msg;
        msg << "m=" << r.m << " d=" << r.d << ": " << what;
        r.failures.push_back(msg.str());
    };

    for (int n : divisors(2 * m + 1)) {
        if (n == 1)
            continue;
        FactorCheck f;
        f.n = n;
        f.z0_bound = z0_bound(n, m, d);
        f.max_root = max_real_root(fn_monic(n, m, d));
        f.graeffe_ok = f.max_root <= f.z0_bound;
        f.upper_ok = 2.0 * f.max_root - 1.0 < target;
        z_max = std::max(z_max, f.max_root);
        std::ostringstream detail;
        detail.precision(17);
        if (!f.graeffe_ok) {
            detail << "n=" << n << ": largest root " << f.max_root << " exceeds Graeffe bound " << f.z0_bound;
            fail(detail.str());
        }
        if (!f.upper_ok) {
            detail << "n=" << n << ": 2*root-1 = " << 2.0 * f.max_root - 1.0 << " not below " << target;
            fail(detail.str());
        }
        r.factors.push_back(f);
    }

    const Spectrum s = eigenvalues_dense(build_extremal_graph(m, d));
    const EigenvalueWindow w = lambda2_window(m, d);
    r.lambda2 = s.values.at(1);
    r.window_lower = w.lower;
    r.window_upper = w.upper;
    r.lambda2_ok = r.lambda2 >= w.lower - theorem_slack && r.lambda2 < w.upper + theorem_slack;
    if (!r.lambda2_ok) {
        std::ostringstream detail;
        detail.precision(17);
        detail << "lambda2 " << r.lambda2 << " outside [" << w.lower << ", " << w.upper << ")";
        fail(detail.str());
    }
    r.factor_consistency = std::abs(r.lambda2 - (2.0 * z_max - 1.0));
    if (!(r.factor_consistency <= factor_consistency_tol)) {
        std::ostringstream detail;
        detail.precision(17);
        detail << "lambda2 " << r.lambda2 << " disagrees with largest factor root 2z-1 = " << 2.0 * z_max - 1.0;
        fail(detail.str());
    }
    return r;
}

} // namespace extremal
