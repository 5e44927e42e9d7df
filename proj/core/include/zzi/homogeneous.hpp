#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace zzi::homogeneous {

// Even trigonometric weight on the unit circle,
// w(t) = [(1 - sin(th) cos(tv) cos t)^2 - (cos(th) sin(tv))^2]^{1/2},
// and its reciprocal w^# = 1/w (integrable iff th + tv != pi/2).
struct CircleWeight {
    double th = 0.0; // horizontal angle
    double tv = 0.0; // vertical angle
    bool dual = false;

    double operator()(double t) const;
};

CircleWeight make_weight(double th, double tv, bool dual);

// q_-^2 = tan(th/2) tan(pi/4 - tv/2), q_+^2 = tan(th/2) tan(pi/4 + tv/2),
// C = cos^2(th/2) cos(tv): the |1 - q^2 e^{it}| factorization constants.
double q_minus_sq(double th, double tv);
double q_plus_sq(double th, double tv);
double weight_scale_C(double th, double tv);

// Fourier cosine coefficients c_0..c_S of an even 2pi-periodic function, by
// the trapezoid rule with resolution doubling until stable to 1e-13.
std::vector<double> fourier_moments(const std::function<double(double)>& f,
                                    std::size_t S);
std::vector<double> weight_fourier_moments(const CircleWeight& w,
                                           std::size_t S);

// Verblunsky coefficients alpha_0..alpha_{n-1} and squared norms
// beta_0..beta_n (beta_0 = c_0, beta_{k+1} = beta_k (1 - alpha_k^2)) of the
// monic orthogonal polynomials for the real even weight with cosine
// coefficients c.
struct OPUCState {
    std::vector<double> alpha;
    std::vector<double> beta;
};

OPUCState verblunsky(const std::vector<double>& c, std::size_t n);

// Telescoped products converging to the fourth power of the spontaneous
// magnetization: value_m = prod_{k=0}^{2m+1} beta#_k * prod_{k=0}^{2m-1}
// beta_k * (L0^2 - L0*^2), with L0 = cos(tv), L0* = sin(th).
struct SubcriticalProducts {
    std::vector<double> values; // m = 0..m_max
    double limit = 0.0;
    double L0 = 0.0;
    double L0star = 0.0;
};

SubcriticalProducts subcritical_product(double th, double tv,
                                        std::size_t m_max);

// Spontaneous magnetization [1 - (tan th tan tv)^2]^{1/8}.
double koy_magnetization(double th, double tv);

// Szego constant in three equivalent forms.
double szego_G(double th, double tv);        // product over q_+-
double szego_G_trig(double th, double tv);   // closed trigonometric form
double szego_G_expsum(double th, double tv); // exponential-sum form

// Energy density on a vertical edge: beta#_0 (cos tv - alpha#_0 sin th).
double energy_density(double th, double tv);

} // namespace zzi::homogeneous
