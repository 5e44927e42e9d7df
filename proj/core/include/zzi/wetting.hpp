#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace zzi::wetting {

// Subcritical bulk angle theta (< pi/4, q = tan theta) with a modified first
// column theta_1; the boundary parameter is r = 1 - cos^2(theta_1)/cos^2(theta)
// in (-q^2, 1).
struct WettingModel {
    double theta = 0.0;
    double theta1 = 0.0;
    double q = 0.0;
    double r = 0.0;

    static WettingModel from_q_r(double q, double r);
    static WettingModel from_angles(double theta, double theta1);

    double zeta0() const;      // q^2 / r, the bound-state location (r > 0)
    double c_coefficient() const; // (r^2-q^4) r^{-3/2} (r-q^4)^{-1/2}, r > q^2
    double w(double t) const;  // |1 - q^2 e^{it}|
    std::complex<double> xi(std::complex<double> z) const;
};

// Circle Fourier data of w and xi*w, plus the geometric bound-state tail.
struct FourierBank {
    std::vector<double> alpha;  // alpha_s = alpha_{-s}, s = 0..s_max
    std::vector<double> beta;   // beta_s, s = 0..s_max
    std::vector<double> gamma;  // gamma_s = c (q^2/r)^s for r > q^2, else 0
    double beta_imag_max = 0.0; // quadrature diagnostic
};

FourierBank wetting_coefficients(const WettingModel& model, std::size_t s_max);

// Boundary-column magnetization.  Two sign/index variants of the
// Toeplitz+Hankel formula are evaluated:
//   A: (1-r)^{-3/2} det[alpha_{k-n} - beta_{k+n} + (1-r)^{3/2} gamma_{k+n}]
//   B: (1-r)^{-3/2} det[alpha_{k-n} + beta_{k+n} + (1-r)^{3/2} c zeta0^{k+n-1}]
// The variant matching the independent layered engine (angle sequence
// theta_1, theta, theta, ...) within `tol` is returned; if neither matches,
// zzi::consistency_error is thrown.
struct WettingReport {
    double value = 0.0;
    char variant = 'A';
    double variant_a = 0.0;
    double variant_b = 0.0;
    double reference = 0.0;
    double mismatch = 0.0; // |accepted - reference|
};

WettingReport wetting_magnetization(const WettingModel& model, std::size_t m,
                                    double tol = 1e-5);

// One variant's determinant value (helper, exposed for structure tests).
double wetting_determinant(const FourierBank& bank, std::size_t m, double r,
                           bool proof_variant, double c_coeff, double zeta0);

// Boundary field at which r = q^2: the bound state enters the continuum and
// the gamma tail switches off.
struct CriticalFieldReport {
    double theta1 = 0.0;
    double r = 0.0;
    double h = 0.0; // field strength 2 J_1 at unit inverse temperature
};

CriticalFieldReport critical_field(double q);

} // namespace zzi::wetting
