#pragma once

#include <cstddef>
#include <vector>

namespace zzi::critical {

// Hardcoded literature constant, 20 digits.
inline constexpr double kZetaPrimeMinusOne = -0.16542114370045092921;

// Squared monic orthogonal-polynomial norms ||P_0||^2..||P_nmax||^2 for the
// discrete measure sum_i w_i delta_{x_i}, by the Stieltjes procedure.
std::vector<double> stieltjes_norms(const std::vector<double>& x,
                                    const std::vector<double>& w,
                                    std::size_t n_max);

// Monic norms on [-1, 1] for the critical-line weights
// [1 - (sin(theta) x)^2]^{+1/2} (dual = false) or ^{-1/2} (dual = true),
// via the substitution x = sin(u) and Gauss-Legendre quadrature in u, with
// resolution doubling until the norms are stable to relative 1e-10.
std::vector<double> realline_norms(double theta, bool dual,
                                   std::size_t n_max);

// Correlation chain along the critical line th = theta, tv = pi/2 - theta.
// A_n and B_n are the scaled norms entering the quadratic identities; the
// d_tilde values satisfy cos(theta) Dt_{n+1} = (A_n - B_{n+1}) D_n / 2.
struct CriticalChain {
    std::vector<double> d;       // D_0..D_nmax
    std::vector<double> l;       // L_0..L_nmax
    std::vector<double> a;       // A_0..A_{nmax-1}
    std::vector<double> b;       // B_1..B_nmax stored at index n
    std::vector<double> d_tilde; // Dt_1..Dt_nmax stored at index n
};

// Chain built by alternating the D -> L and L -> D recurrences.
CriticalChain critical_correlations(double theta, std::size_t n_max);

// Chain built from D_{m+1}/D_m = (A_m + B_{m+1})/2; also checks the
// harmonic-mean form 2 (A_{m-1}^{-1} + B_m^{-1})^{-1} pointwise.
CriticalChain quadratic_chain(double theta, std::size_t n_max);

// C_sigma = 2^{1/6} exp((3/2) zeta'(-1)).
double c_sigma();

// D_m (2m cos theta)^{1/4} / C_sigma^2; tends to 1 as m grows.
double mccoy_wu_check(double theta, std::size_t m);

} // namespace zzi::critical
