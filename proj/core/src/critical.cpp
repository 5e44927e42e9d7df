#include "zzi/critical.hpp"

#include <cmath>
#include <string>

#include "zzi/angles.hpp"
#include "zzi/eigen.hpp"
#include "zzi/errors.hpp"

namespace zzi::critical {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

std::vector<double> stieltjes_norms(const std::vector<double>& x,
                                    const std::vector<double>& w,
                                    std::size_t n_max) {
    const std::size_t M = x.size();
    if (w.size() != M || M == 0)
        throw size_error("stieltjes_norms: node/weight size mismatch");
    if (M < n_max + 1)
        throw size_error("stieltjes_norms: quadrature too short for degree " +
                         std::to_string(n_max));

    std::vector<double> norms(n_max + 1);
    std::vector<double> p_prev(M, 0.0), p_cur(M, 1.0);
    double nrm = 0.0, xsum = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        nrm += w[i];
        xsum += w[i] * x[i];
    }
    norms[0] = nrm;
    double alpha = xsum / nrm;
    double beta = 0.0;
    for (std::size_t n = 0; n < n_max; ++n) {
        std::vector<double> p_next(M);
        double nrm_next = 0.0, xsum_next = 0.0;
        for (std::size_t i = 0; i < M; ++i) {
            p_next[i] = (x[i] - alpha) * p_cur[i] - beta * p_prev[i];
            const double sq = w[i] * p_next[i] * p_next[i];
            nrm_next += sq;
            xsum_next += sq * x[i];
        }
        if (!(nrm_next > 0.0))
            throw numeric_error(
                "stieltjes_norms: norm collapsed at degree " +
                std::to_string(n + 1));
        norms[n + 1] = nrm_next;
        alpha = xsum_next / nrm_next;
        beta = nrm_next / norms[n];
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
    }
    return norms;
}

std::vector<double> realline_norms(double theta, bool dual,
                                   std::size_t n_max) {
    check_angle(theta, 1);
    const double s = std::sin(theta);

    std::size_t Q = std::max<std::size_t>(96, n_max + 40);
    std::vector<double> prev;
    for (; Q <= (1u << 15); Q *= 2) {
        std::vector<double> gx, gw;
        gauss_legendre(Q, gx, gw);
        // x = sin(u), u = (pi/2) t: the substitution removes the endpoint
        // singularity of the reciprocal weight.
        std::vector<double> nodes(Q), weights(Q);
        for (std::size_t i = 0; i < Q; ++i) {
            const double u = 0.5 * kPi * gx[i];
            const double x = std::sin(u);
            const double base = 1.0 - (s * x) * (s * x);
            const double wgt = dual ? 1.0 / std::sqrt(base) : std::sqrt(base);
            nodes[i] = x;
            weights[i] = gw[i] * 0.5 * kPi * std::cos(u) * wgt;
        }
        std::vector<double> norms = stieltjes_norms(nodes, weights, n_max);
        if (!prev.empty()) {
            double worst = 0.0;
            for (std::size_t n = 0; n <= n_max; ++n)
                worst = std::max(worst,
                                 std::fabs(norms[n] - prev[n]) / norms[n]);
            if (worst <= 1e-10)
                return norms;
        }
        prev = std::move(norms);
    }
    throw numeric_error(
        "realline_norms: quadrature did not stabilize to relative 1e-10");
}

namespace {

// Scaled norms A_n = 2^{2n} ||P_n||^2 / pi (same for the dual weight); both
// stay O(1) as n grows, which keeps the chains overflow-free.
std::vector<double> scaled_norms(double theta, bool dual, std::size_t n_max) {
    const std::vector<double> norms = realline_norms(theta, dual, n_max);
    std::vector<double> out(n_max + 1);
    double scale = 1.0 / kPi;
    for (std::size_t n = 0; n <= n_max; ++n) {
        out[n] = scale * norms[n];
        scale *= 4.0;
    }
    return out;
}

void check_d_range(double d, std::size_t n) {
    if (!(d > 0.0) || d > 1.0 + 1e-12)
        throw numeric_error("correlation chain left (0, 1] at n = " +
                            std::to_string(n) + " (D = " + std::to_string(d) +
                            ")");
}

} // namespace

CriticalChain critical_correlations(double theta, std::size_t n_max) {
    check_angle(theta, 1);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const std::vector<double> A = scaled_norms(theta, false, n_max);
    const std::vector<double> h = scaled_norms(theta, true, n_max);

    CriticalChain ch;
    ch.d.assign(n_max + 1, 0.0);
    ch.l.assign(n_max + 1, 0.0);
    ch.a.assign(A.begin(), A.begin() + n_max);
    ch.b.assign(n_max + 1, 0.0);
    ch.d_tilde.assign(n_max + 1, 0.0);
    ch.d[0] = 1.0;
    ch.l[0] = s;
    for (std::size_t n = 0; n < n_max; ++n) {
        ch.d[n + 1] = h[n] * ch.l[n] / s;
        ch.l[n + 1] = s * A[n] * ch.d[n];
        check_d_range(ch.d[n + 1], n + 1);
        ch.b[n + 1] = h[n + 1];
        ch.d_tilde[n + 1] =
            (A[n] - 0.25 * s * s * h[n + 1]) * ch.d[n] / c;
    }
    return ch;
}

CriticalChain quadratic_chain(double theta, std::size_t n_max) {
    check_angle(theta, 1);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const std::vector<double> A = scaled_norms(theta, false, n_max);
    const std::vector<double> h = scaled_norms(theta, true, n_max);

    CriticalChain ch;
    ch.d.assign(n_max + 1, 0.0);
    ch.l.assign(n_max + 1, 0.0);
    ch.a.assign(A.begin(), A.begin() + n_max);
    ch.b.assign(n_max + 1, 0.0);
    ch.d_tilde.assign(n_max + 1, 0.0);
    ch.d[0] = 1.0;
    ch.l[0] = s;
    // Quadratic two-term recurrence: the sum and difference
    //   D_{n+1} + cos(theta) Dt_{n+1} = 2 A_n D_n,
    //   D_{n+1} - cos(theta) Dt_{n+1} = (sin^2(theta)/2) B_{n+1} D_n
    // close the chain without tracking the L sequence at all.
    for (std::size_t n = 0; n < n_max; ++n) {
        const double ratio = A[n] + 0.25 * s * s * h[n + 1];
        ch.d[n + 1] = ch.d[n] * ratio;
        ch.l[n + 1] = s * A[n] * ch.d[n];
        check_d_range(ch.d[n + 1], n + 1);
        ch.b[n + 1] = h[n + 1];
        ch.d_tilde[n + 1] =
            (A[n] - 0.25 * s * s * h[n + 1]) * ch.d[n] / c;
    }
    return ch;
}

double c_sigma() {
    return std::pow(2.0, 1.0 / 6.0) * std::exp(1.5 * kZetaPrimeMinusOne);
}

double mccoy_wu_check(double theta, std::size_t m) {
    if (m < 10)
        throw domain_error("mccoy_wu_check is meaningful only for m >= 10");
    const CriticalChain ch = quadratic_chain(theta, m);
    const double cs = c_sigma();
    return ch.d[m] *
           std::pow(2.0 * static_cast<double>(m) * std::cos(theta), 0.25) /
           (cs * cs);
}

} // namespace zzi::critical
