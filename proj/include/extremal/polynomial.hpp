#ifndef EXTREMAL_POLYNOMIAL_HPP
#define EXTREMAL_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "extremal/errors.hpp"

namespace extremal {

/// num/den in lowest terms (gmpxx leaves two-argument construction uncanonicalized).
inline mpq_class rational(const mpz_class& num, const mpz_class& den)
{
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

namespace detail {

inline double to_double(const mpz_class& v) { return v.get_d(); }
inline double to_double(const mpq_class& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

// long double keeps ~64 bits of mantissa; mpq -> num/den split avoids the
// double range limit on large coefficients.
inline long double to_long_double(const mpz_class& v)
{
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}
inline long double to_long_double(const mpq_class& v)
{
    return to_long_double(v.get_num()) / to_long_double(v.get_den());
}

} // namespace detail

/// Dense univariate polynomial with coefficients in ascending degree order.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has degree -1. Intended scalars are
/// mpz_class and mpq_class; any type with field/ring operators and
/// comparison with 0 works.
template <typename Scalar>
class Polynomial
{
public:
    using scalar_type = Scalar;

    Polynomial() = default;
    Polynomial(std::initializer_list<Scalar> ascending) : c_(ascending) { trim(); }
    explicit Polynomial(std::vector<Scalar> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial constant(const Scalar& a) { return Polynomial({a}); }
    /// a * x^k
    static Polynomial monomial(const Scalar& a, std::size_t k)
    {
        std::vector<Scalar> c(k + 1, Scalar(0));
        c[k] = a;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    /// Coefficient of x^k; zero outside the stored range.
    Scalar operator[](long k) const
    {
        if (k < 0 || static_cast<std::size_t>(k) >= c_.size())
            return Scalar(0);
        return c_[static_cast<std::size_t>(k)];
    }

    Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Scalar& a)
    {
        for (auto& v : c_)
            v *= a;
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o)
    {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& v : a.c_)
            v = -v;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Horner evaluation in a floating or complex type T.
    template <typename T>
    T evaluate(const T& x) const
    {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + T(convert<T>(*it));
        return acc;
    }

    /// Exact evaluation at a scalar of the coefficient ring.
    Scalar operator()(const Scalar& x) const
    {
        Scalar acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

private:
    template <typename T>
    static auto convert(const Scalar& v)
    {
        if constexpr (std::is_same_v<T, long double> || std::is_same_v<T, std::complex<long double>>)
            return detail::to_long_double(v);
        else
            return detail::to_double(v);
    }

    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Scalar> c_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RationalPolynomial = Polynomial<mpq_class>;

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, unsigned k)
{
    Polynomial<Scalar> result = Polynomial<Scalar>::constant(Scalar(1));
    Polynomial<Scalar> base = p;
    while (k > 0) {
        if (k & 1u)
            result = result * base;
        k >>= 1u;
        if (k > 0)
            base = base * base;
    }
    return result;
}

/// p(q(x)) by Horner's scheme in polynomial arithmetic.
template <typename Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q)
{
    Polynomial<Scalar> acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * q + Polynomial<Scalar>::constant(*it);
    return acc;
}

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p)
{
    if (p.degree() < 1)
        return {};
    std::vector<Scalar> out(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k)
        out[static_cast<std::size_t>(k - 1)] = p[k] * Scalar(k);
    return Polynomial<Scalar>(std::move(out));
}

/// p(x) / x; the constant term must vanish.
template <typename Scalar>
Polynomial<Scalar> divide_by_x(const Polynomial<Scalar>& p)
{
    if (p.is_zero())
        return {};
    if (p[0] != 0)
        throw consistency_error("divide_by_x: constant term is nonzero");
    return Polynomial<Scalar>(std::vector<Scalar>(p.coeffs().begin() + 1, p.coeffs().end()));
}

/// Synthetic division by (x - r): returns {quotient, remainder}.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Scalar> divide_linear(const Polynomial<Scalar>& p, const Scalar& r)
{
    if (p.degree() < 1)
        return {Polynomial<Scalar>(), p[0]};
    const auto n = static_cast<std::size_t>(p.degree());
    std::vector<Scalar> q(n);
    Scalar carry = p.coeffs()[n];
    for (std::size_t k = n; k-- > 0;) {
        q[k] = carry;
        carry = p.coeffs()[k] + carry * r;
    }
    return {Polynomial<Scalar>(std::move(q)), carry};
}

/// p(x + c).
template <typename Scalar>
Polynomial<Scalar> taylor_shift(const Polynomial<Scalar>& p, const Scalar& c)
{
    return compose(p, Polynomial<Scalar>({c, Scalar(1)}));
}

inline RationalPolynomial to_rational(const IntPolynomial& p)
{
    std::vector<mpq_class> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs())
        c.emplace_back(v);
    return RationalPolynomial(std::move(c));
}

/// Converts to integer coefficients; any non-integral coefficient is an
/// internal consistency failure.
inline IntPolynomial to_integer(const RationalPolynomial& p, const std::string& context = "to_integer")
{
    std::vector<mpz_class> c;
    c.reserve(p.coeffs().size());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const mpq_class& v = p.coeffs()[k];
        if (v.get_den() != 1)
            throw consistency_error(context + ": coefficient of x^" + std::to_string(k) + " is " +
                                    v.get_str() + ", not an integer");
        c.push_back(v.get_num());
    }
    return IntPolynomial(std::move(c));
}

inline RationalPolynomial to_rational_any(const RationalPolynomial& p) { return p; }
inline RationalPolynomial to_rational_any(const IntPolynomial& p) { return to_rational(p); }

/// For a real-rooted polynomial p with positive leading coefficient: true
/// iff every root is strictly below `bound`. Exact: p(x + bound) then has
/// only positive coefficients exactly when all shifted roots are negative.
template <typename Scalar>
bool all_roots_below(const Polynomial<Scalar>& p, const mpq_class& bound)
{
    const RationalPolynomial shifted = taylor_shift(to_rational_any(p), bound);
    for (int k = 0; k <= shifted.degree(); ++k)
        if (shifted[k] <= 0)
            return false;
    return true;
}

std::string to_string(const IntPolynomial& p, const std::string& var = "x");

} // namespace extremal

#endif
