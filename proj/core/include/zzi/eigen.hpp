#pragma once

#include <cstddef>
#include <vector>

#include "zzi/tridiag.hpp"

namespace zzi {

// Eigenvalues (ascending) of the symmetric tridiagonal matrix with diagonal d
// and off-diagonal e (|e| = |d| - 1), by implicit-shift QL.  If zrows > 0,
// *z is filled row-major (zrows x N) with the first `zrows` components of
// each normalized eigenvector: (*z)[r*N + j] is component r of the
// eigenvector belonging to eigenvalue j.  Throws zzi::numeric_error on
// non-convergence.
void tridiag_eigen(std::vector<double> d, std::vector<double> e,
                   std::vector<double>& values,
                   std::vector<double>* z = nullptr, std::size_t zrows = 0);

// Gauss quadrature of the spectral measure <e_1, f(J) e_1>: nodes are the
// eigenvalues of the truncation, weights the squared first eigenvector
// components.
SpectralQuadrature spectral_quadrature(const JacobiOperator& J);

// n-point Gauss-Legendre rule on [-1, 1] (weights sum to 2), computed from
// the Legendre three-term recurrence via the same tridiagonal eigensolver.
void gauss_legendre(std::size_t n, std::vector<double>& x,
                    std::vector<double>& w);

// Eigenvalues (ascending) of a dense symmetric matrix, row-major n x n:
// Householder reduction to tridiagonal form followed by tridiag_eigen.
std::vector<double> symmetric_eigenvalues(std::vector<double> a,
                                          std::size_t n);

} // namespace zzi
