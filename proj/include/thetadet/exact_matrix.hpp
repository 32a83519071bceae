#pragma once

#include <Eigen/Core>

#include "thetadet/dyadic.hpp"

namespace Eigen {

// Let Eigen dense matrices carry exact dyadic scalars.  Only ring operations
// are used on them (no decompositions), so the precision hooks are inert.
template <>
struct NumTraits<thetadet::Dyadic> {
    using Real = thetadet::Dyadic;
    using NonInteger = thetadet::Dyadic;
    using Nested = thetadet::Dyadic;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 32,
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

} // namespace Eigen

namespace thetadet {

using ExactMatrix = Eigen::Matrix<Dyadic, Eigen::Dynamic, Eigen::Dynamic>;

// Exact determinant over the dyadic ring: entries are scaled to integers by
// the common power of two, eliminated fraction-free (Bareiss), and the scale
// restored.  Returns exact 0 for singular input; det of a 0x0 matrix is 1.
Dyadic det_exact(const ExactMatrix& m);

// Principal submatrix with row/column `deleted` removed.
ExactMatrix delete_row_col(const ExactMatrix& m, int deleted);

bool matrices_equal(const ExactMatrix& a, const ExactMatrix& b);

} // namespace thetadet
