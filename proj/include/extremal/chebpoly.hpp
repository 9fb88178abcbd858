#ifndef EXTREMAL_CHEBPOLY_HPP
#define EXTREMAL_CHEBPOLY_HPP

#include <vector>

#include "extremal/graph.hpp"
#include "extremal/polynomial.hpp"

namespace extremal {

/// Chebyshev polynomial of the first kind, from the explicit binomial sum.
IntPolynomial chebyshev_T(int n);
/// Chebyshev polynomial of the second kind, from the explicit binomial sum.
IntPolynomial chebyshev_U(int n);

/// Positive divisors of k in increasing order.
std::vector<int> divisors(int k);
int euler_phi(int n);

/// The bracket (-2m+1 + (2m-d)/z) T_n(z) + (2m+1)(z-1) U_{n-1}(z) as a
/// polynomial in z (n odd, so T_n(z)/z is a polynomial). Degree n, leading
/// coefficient 2^n. This is f_n in the root-bound argument.
IntPolynomial bracket_factor(int n, int m, int d);

/// How the product over the 2m+1 roots of unity is evaluated.
enum class RootProduct
{
    by_divisor, ///< one factor per divisor n of 2m+1, raised to phi(n)
    per_root,   ///< one factor per j = 1..2m+1
};

/// Characteristic polynomial of the extremal graph in closed form,
/// assembled exactly under z = (x+1)/2. Monic of degree (2m+1)(d+1).
IntPolynomial char_poly_exact(int m, int d, RootProduct grouping = RootProduct::by_divisor);

inline constexpr int char_poly_oracle_max_vertices = 128;

/// det(xI - A) by the Faddeev-LeVerrier trace recursion in exact rational
/// arithmetic. Refuses graphs above char_poly_oracle_max_vertices.
IntPolynomial char_poly_oracle(const Graph& g);

} // namespace extremal

#endif
