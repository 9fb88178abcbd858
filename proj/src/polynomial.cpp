#include "extremal/polynomial.hpp"

#include <sstream>

namespace extremal {

std::string to_string(const IntPolynomial& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const mpz_class c = p[k];
        if (c == 0)
            continue;
        const mpz_class mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || k == 0)
            out << mag.get_str();
        if (k >= 1)
            out << var;
        if (k >= 2)
            out << '^' << k;
    }
    return out.str();
}

} // namespace extremal
