#pragma once

#include <cstddef>
#include <vector>

namespace zzi::exact {

// Diagonal correlation at the fully critical point,
// D_n = (2/pi)^n prod_{k=1}^{n-1} (1 - 1/(4k^2))^{k-n}, in log domain.
double wu_diagonal_log(std::size_t n);
double wu_diagonal(std::size_t n);

// Zig-zag column magnetization,
// M_m = (2/pi)^m prod_{k=1}^{2m-1} (1 - 1/(4k^2))^{floor(k/2)-m}.
double zigzag_magnetization_log(std::size_t m);
double zigzag_magnetization_exact(std::size_t m);

// Same quantity through the ratio recursion M_{m+1}/M_m = D_{2m+2}/D_{2m+1}.
double zigzag_magnetization_via_ratio(std::size_t m);

// Magnetization on the half-integer grid: argument is 2m, so
// half_integer_magnetization(-1) = sqrt(2) (the conventional M_{-1/2}),
// even arguments give the integer values, odd ones use
// M_{m+1/2} M_m = sqrt(2) D_{2m+1}.
double half_integer_magnetization(long long twice_m);

// Discrete spinor V(k, s) on k in [-K, K], s in [0, S], k + s + n even, from
// V(k, s) = (C_n / 2pi) int e^{-ikt} y(t)^s P_n(cos t) dt with
// y(t) = cos(t) / (1 + sin(t)) on [0, pi], normalized so V(+-n, 0) = D_n.
struct SpinorField {
    long long n = 0;
    long long K = 0;
    long long S = 0;
    double c_n = 0.0;
    std::vector<double> values; // (2K+1) x (S+1), row k+K, column s

    double value(long long k, long long s) const;
};

SpinorField legendre_spinor(long long n, long long K, long long S);

// Residuals of the rotated-lattice 5-point Laplacian
// [Delta V](k,s) = -V(k,s) + (1/4) sum of the four diagonal neighbors,
// using the reflection V(k,-1) = V(k,1) on the boundary row.
struct LaplacianReport {
    double interior_max = 0.0; // over s in [1, S-1], |k| <= K-1
    double boundary_row_max = 0.0; // s = 0, k != +-n
    double branch_plus = 0.0;  // [Delta V](+n, 0)
    double branch_minus = 0.0; // [Delta V](-n, 0)
};

LaplacianReport spinor_laplacian_residuals(const SpinorField& field);

// D_n (2n)^{1/4} / C_sigma^2 and M_n (2n)^{1/8} / (2^{1/8} C_sigma).
struct AsymptoticsReport {
    double d_ratio = 0.0;
    double m_ratio = 0.0;
};

AsymptoticsReport diagonal_asymptotics_check(std::size_t n);

} // namespace zzi::exact
