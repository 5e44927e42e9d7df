#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zzi/angles.hpp"
#include "zzi/tridiag.hpp"

namespace zzi::layered {

enum class Method { Sqrt, Hankel, Polar };

std::string method_name(Method m);

struct MagnetizationReport {
    std::size_t m = 0;
    double value = 1.0;
    Method method = Method::Sqrt;
    std::size_t truncation = 0; // N actually used
    double est_error = 0.0;     // truncation-convergence estimate
};

// Magnetization of the (2m)-th column of the zig-zag half-plane.  The
// truncation starts at max(64, 8m) and doubles (with Aitken extrapolation of
// the half-power quantities) until the result is stable to `tol` relative,
// up to N = 2^14.  `n_override` > 0 evaluates at a fixed truncation instead.
MagnetizationReport magnetization(const AngleSequence& angles, std::size_t m,
                                  Method method = Method::Sqrt,
                                  double tol = 1e-8,
                                  std::size_t n_override = 0);

// Max interior residual of the exponentially decaying kernel vector
// psi_k = (cot theta)^{2k} under D^T in the supercritical homogeneous model
// (theta > pi/4), normalized so the largest component is 1.
double kernel_residual_homogeneous(double theta, std::size_t N);

struct CriticalityReport {
    double product = 0.0; // prod_{k=1}^{2n} tan(theta_k)
    bool critical = false;
};

CriticalityReport periodic_criticality(const std::vector<double>& block);

// Entries (b_1..b_n, a_1..a_n) of the period-n bi-infinite operator built
// from an even critical-or-not block theta_1..theta_{2n}; a_n couples site n
// to site n+1 of the next period.
void periodic_entries(const std::vector<double>& block, std::vector<double>& b,
                      std::vector<double>& a);

// psi_1..psi_{n+1} of the periodic kernel vector
// psi_k = (sin theta_{2k-1})^{-1} prod_{p=1}^{2k-2} cot(theta_p);
// requires a critical block (psi_{n+1} = psi_1 then holds).
std::vector<double> ground_vector(const std::vector<double>& block);

// C_J from a caller-supplied kernel vector (psi of length >= n+1); exposed
// so normalization invariance can be exercised directly.
double cj_from_kernel(const std::vector<double>& block,
                      const std::vector<double>& psi);

// C_J = [n^{-2} sum psi_k^2 * sum (a_k psi_k psi_{k+1})^{-1}]^{1/2}.
double cj_constant(const std::vector<double>& block);

struct IdsReport {
    std::vector<double> lambdas;
    std::vector<double> ids;
    double slope = 0.0; // least-squares slope of IDS against sqrt(lambda)/pi
};

// Eigenvalue counting function of the Nn x Nn truncation with periodic
// boundary conditions, by Sylvester inertia counts; the slope is fitted over
// the lowest 10% of the lambda window, weighted by 1/sqrt(lambda).
IdsReport ids_empirical(const std::vector<double>& block,
                        std::size_t n_periods,
                        const std::vector<double>& lambda_grid);

// Lowest eigenvalue of the twisted n x n Floquet block at quasi-momentum t;
// behaves like (n C_J)^{-2} t^2 near t = 0 for critical blocks.
double twisted_lowest_eigenvalue(const std::vector<double>& block, double t);

} // namespace zzi::layered
