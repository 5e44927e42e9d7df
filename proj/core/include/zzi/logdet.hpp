#pragma once

#include <cstddef>
#include <vector>

#include "zzi/tridiag.hpp"

namespace zzi {

// Determinant stored as (sign, log-magnitude) to survive fast decay.
struct LogDet {
    int sign = 1;          // -1, 0, +1
    double log_abs = 0.0;  // natural log of |det|; -inf when sign == 0

    double value() const;
};

// LU with partial pivoting on a dense row-major n x n matrix (destroyed).
LogDet dense_logdet(std::vector<double> a, std::size_t n);

// m x m Hankel determinant det[mu_{p+q}], p,q = 0..m-1; `mu` must hold
// orders 0..2m-2.  Works for integer- or half-integer-power moment tables.
LogDet hankel_logdet(const std::vector<double>& mu, std::size_t m);
LogDet hankel_logdet(const MomentTable& table, std::size_t m);

// log det of the leading m x m minor of J^{1/2}, J^{1/2} formed from the
// eigendecomposition of the truncation.  Eigenvalues below -1e-10 violate
// the 0 <= J <= 1 operator inequality and raise zzi::numeric_error; small
// negative round-off is clamped to zero.
LogDet sqrt_minor_logdet(const JacobiOperator& J, std::size_t m);

// log|det| of the leading m x m minor of the partial isometry
// U = D^T (D D^T)^{-1/2} built on the N x N truncation.
LogDet polar_minor_logdet(const BidiagonalOperator& D, std::size_t m);

} // namespace zzi
