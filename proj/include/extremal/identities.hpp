#ifndef EXTREMAL_IDENTITIES_HPP
#define EXTREMAL_IDENTITIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace extremal {

/// Outcome of a seeded randomized identity check.
struct IdentityReport
{
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::size_t evaluations = 0;
    std::size_t resampled = 0; ///< points discarded for sitting too close to a pole
    double max_deviation = 0.0;
    std::map<std::string, double> max_deviation_by_identity;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    /// Throws theorem_check_failure listing the failures, if any.
    void require_ok() const;
};

/// Checks, at `trials` random points per root of unity index t in [1, 2m+1]:
///  - prod_{j=1}^m (x^2+2x-1+zeta^j+conj(zeta^j)) = (2T_n(z))^g / (2z)
///  - sum_{j=1}^m (2x+zeta^j+conj)/(x^2+2x-1+zeta^j+conj)
///        = -1/(2z) + (2m+1)/(2T_n(z)) (T_n(z) - (z-1)U_{n-1}(z))
/// with zeta = exp(2 pi i t/(2m+1)), g = gcd(2m+1, t), n = (2m+1)/g,
/// z = (x+1)/2, plus T_{2m+1}(z)/z = 4^m prod_j (z^2 - sin^2(pi j/(2m+1))).
/// x is drawn from `x_range`, by default [-3, 2m+3].
IdentityReport verify_root_of_unity_identities(int m, int trials, double tol, std::uint64_t seed = 0,
                                               std::optional<std::pair<double, double>> x_range = std::nullopt);

/// Random small instances of det(A + u v^T) = (1 + v^T A^{-1} u) det A,
/// det(aI + bJ) = a^n + n a^{n-1} b and
/// (aI + bJ)^{-1} = I/a - b/(a(a+nb)) J.
IdentityReport verify_linear_algebra_lemmas(int trials, double tol, std::uint64_t seed = 0);

/// |lhs - rhs| / max(1, |lhs|, |rhs|)
double relative_deviation(double lhs, double rhs);

} // namespace extremal

#endif
