#pragma once

#include <cstddef>
#include <vector>

#include "zzi/angles.hpp"

namespace zzi {

// Symmetric tridiagonal truncation of the inter-column propagation operator:
// diag b_k = cos^2(theta_{2k-1}) cos^2(theta_{2k}) +
//            sin^2(theta_{2k-2}) sin^2(theta_{2k-1}),
// offdiag a_k = cos(theta_{2k-1}) cos(theta_{2k}) sin(theta_{2k})
//               sin(theta_{2k+1}),
// with theta_0 = 0.  The off-diagonal sign is immaterial (conjugation by a
// diagonal +-1 matrix); +a_k is stored.
struct JacobiOperator {
    std::vector<double> diag;    // b_1..b_N
    std::vector<double> offdiag; // a_1..a_{N-1}

    std::size_t size() const { return diag.size(); }
};

// Lower bidiagonal factor with d_k = cos(theta_{2k-1}) cos(theta_{2k}) on the
// diagonal and s_k = sin(theta_{2k}) sin(theta_{2k+1}) on the subdiagonal
// (row k+1, column k).  D D^T reproduces JacobiOperator entrywise.
struct BidiagonalOperator {
    std::vector<double> diag;    // d_1..d_N
    std::vector<double> subdiag; // s_1..s_{N-1}

    std::size_t size() const { return diag.size(); }
};

// Integer-power moments mu_p = <e_1, J^p e_1> of the spectral measure.
struct MomentTable {
    std::vector<double> mu; // mu[p], p = 0..P
};

// Atoms (lambda_i, w_i) of the truncated spectral measure, nodes ascending.
struct SpectralQuadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

JacobiOperator build_jacobi(const AngleSequence& angles, std::size_t N);
BidiagonalOperator build_d_even(const AngleSequence& angles, std::size_t N);

// Entrywise product D D^T as a JacobiOperator.
JacobiOperator jacobi_from_bidiagonal(const BidiagonalOperator& D);

// y = J x for a size-matched vector.
std::vector<double> tridiag_apply(const JacobiOperator& J,
                                  const std::vector<double>& x);

// Exact mu_0..mu_P by repeated tridiagonal application to e_1.
MomentTable moments(const JacobiOperator& J, std::size_t P);

} // namespace zzi
