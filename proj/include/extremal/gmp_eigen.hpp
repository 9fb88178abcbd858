#ifndef EXTREMAL_GMP_EIGEN_HPP
#define EXTREMAL_GMP_EIGEN_HPP

#include <Eigen/Core>
#include <gmpxx.h>

// Lets Eigen dense containers hold exact rationals. Only storage and
// coefficient access are used with this scalar; no Eigen kernels.
namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class>
{
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    using Literal = mpq_class;

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

#endif
