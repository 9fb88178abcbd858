#include "extremal/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

// Three-term recurrences in floating point; independent of the exact
// coefficient tables in chebpoly.
double cheb_t(int n, double z)
{
    if (n == 0)
        return 1.0;
    double prev = 1.0, cur = z;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double cheb_u(int n, double z)
{
    if (n == 0)
        return 1.0;
    double prev = 1.0, cur = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

constexpr double pole_margin = 1e-3;

void record(IdentityReport& r, const std::string& name, double lhs, double rhs, const std::string& where)
{
    const double dev = relative_deviation(lhs, rhs);
    ++r.evaluations;
    r.max_deviation = std::max(r.max_deviation, dev);
    auto& slot = r.max_deviation_by_identity[name];
    slot = std::max(slot, dev);
    if (!(dev <= r.tol)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << name << " at " << where << ": lhs=" << lhs << " rhs=" << rhs << " deviation=" << dev;
        r.failures.push_back(msg.str());
    }
}

} // namespace

double relative_deviation(double lhs, double rhs)
{
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

void IdentityReport::require_ok() const
{
    if (ok())
        return;
    std::ostringstream msg;
    msg << failures.size() << " identity check(s) failed (seed " << seed << "); first: " << failures.front();
    throw theorem_check_failure(msg.str());
}

IdentityReport verify_root_of_unity_identities(int m, int trials, double tol, std::uint64_t seed,
                                               std::optional<std::pair<double, double>> x_range)
{
    if (m < 1)
        throw parameter_error("verify_root_of_unity_identities: m must be >= 1");
    if (trials < 0)
        throw parameter_error("verify_root_of_unity_identities: trials must be >= 0");
    const auto [lo, hi] = x_range.value_or(std::pair{-3.0, 2.0 * m + 3.0});

    IdentityReport r;
    r.seed = seed;
    r.tol = tol;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    const int k = 2 * m + 1;

    for (int t = 1; t <= k; ++t) {
        const int g = std::gcd(k, t);
        const int n = k / g;
        std::vector<double> two_cos(static_cast<std::size_t>(m) + 1);
        for (int j = 1; j <= m; ++j)
            two_cos[static_cast<std::size_t>(j)] = 2.0 * std::cos(2.0 * std::numbers::pi * t * j / k);

        for (int trial = 0; trial < trials;) {
            const double x = dist(rng);
            const double z = 0.5 * (x + 1.0);
            const double tn = cheb_t(n, z);
            bool near_pole = std::abs(z) < pole_margin || std::abs(tn) < pole_margin;
            for (int j = 1; j <= m && !near_pole; ++j)
                near_pole = std::abs(x * x + 2.0 * x - 1.0 + two_cos[static_cast<std::size_t>(j)]) < pole_margin;
            if (near_pole) {
                ++r.resampled;
                continue;
            }
            ++trial;

            double prod = 1.0, sum = 0.0;
            for (int j = 1; j <= m; ++j) {
                const double c = two_cos[static_cast<std::size_t>(j)];
                const double q = x * x + 2.0 * x - 1.0 + c;
                prod *= q;
                sum += (2.0 * x + c) / q;
            }
            const double prod_rhs = std::pow(2.0 * tn, g) / (2.0 * z);
            const double sum_rhs = -1.0 / (2.0 * z) + k / (2.0 * tn) * (tn - (z - 1.0) * cheb_u(n - 1, z));

            std::ostringstream where;
            where.precision(17);
            where << "m=" << m << " t=" << t << " x=" << x;
            record(r, "root_of_unity_product", prod, prod_rhs, where.str());
            record(r, "root_of_unity_sum", sum, sum_rhs, where.str());

            double sine_prod = std::pow(4.0, m);
            for (int j = 1; j <= m; ++j) {
                const double s = std::sin(std::numbers::pi * j / k);
                sine_prod *= z * z - s * s;
            }
            record(r, "chebyshev_sine_product", cheb_t(k, z) / z, sine_prod, where.str());
        }
    }
    return r;
}

IdentityReport verify_linear_algebra_lemmas(int trials, double tol, std::uint64_t seed)
{
    if (trials < 0)
        throw parameter_error("verify_linear_algebra_lemmas: trials must be >= 0");
    IdentityReport r;
    r.seed = seed;
    r.tol = tol;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(1, 6);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);

    for (int trial = 0; trial < trials; ++trial) {
        const int n = size_dist(rng);
        std::ostringstream where;
        where << "trial=" << trial << " n=" << n;

        // matrix determinant lemma; diagonal shift keeps A well conditioned
        Eigen::MatrixXd a = Eigen::MatrixXd::NullaryExpr(n, n, [&] { return unit(rng); });
        a.diagonal().array() += n + 1.0;
        const Eigen::VectorXd u = Eigen::VectorXd::NullaryExpr(n, [&] { return unit(rng); });
        const Eigen::VectorXd v = Eigen::VectorXd::NullaryExpr(n, [&] { return unit(rng); });
        const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
        const double lhs = (a + u * v.transpose()).determinant();
        const double rhs = (1.0 + v.dot(lu.solve(u))) * lu.determinant();
        record(r, "determinant_lemma", lhs, rhs, where.str());

        // aI + bJ, keeping a and a + nb away from zero
        double alpha = 0.0, beta = 0.0;
        do {
            alpha = coeff(rng);
            beta = coeff(rng);
        } while (std::abs(alpha) < 0.25 || std::abs(alpha + n * beta) < 0.25);
        const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(n, n);
        const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
        const Eigen::MatrixXd m = alpha * eye + beta * ones;
        record(r, "aI_plus_bJ_determinant", m.determinant(),
               std::pow(alpha, n) + n * std::pow(alpha, n - 1) * beta, where.str());

        const Eigen::MatrixXd inverse = eye / alpha - beta / (alpha * (alpha + n * beta)) * ones;
        const Eigen::MatrixXd residual = m * inverse - eye;
        record(r, "aI_plus_bJ_inverse", residual.cwiseAbs().maxCoeff(), 0.0, where.str());
    }
    return r;
}

} // namespace extremal
