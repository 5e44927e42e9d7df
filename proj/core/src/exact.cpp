#include "zzi/exact.hpp"

#include <cmath>
#include <string>

#include "zzi/critical.hpp"
#include "zzi/eigen.hpp"
#include "zzi/errors.hpp"

namespace zzi::exact {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

double wu_diagonal_log(std::size_t n) {
    double acc = static_cast<double>(n) * std::log(2.0 / kPi);
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        acc += (kk - static_cast<double>(n)) *
               std::log1p(-1.0 / (4.0 * kk * kk));
    }
    return acc;
}

double wu_diagonal(std::size_t n) { return std::exp(wu_diagonal_log(n)); }

double zigzag_magnetization_log(std::size_t m) {
    double acc = static_cast<double>(m) * std::log(2.0 / kPi);
    for (std::size_t k = 1; k + 1 <= 2 * m; ++k) {
        const double kk = static_cast<double>(k);
        acc += (static_cast<double>(k / 2) - static_cast<double>(m)) *
               std::log1p(-1.0 / (4.0 * kk * kk));
    }
    return acc;
}

double zigzag_magnetization_exact(std::size_t m) {
    return std::exp(zigzag_magnetization_log(m));
}

double zigzag_magnetization_via_ratio(std::size_t m) {
    double log_m = 0.0;
    for (std::size_t j = 0; j < m; ++j)
        log_m += wu_diagonal_log(2 * j + 2) - wu_diagonal_log(2 * j + 1);
    return std::exp(log_m);
}

double half_integer_magnetization(long long twice_m) {
    if (twice_m < -1)
        throw domain_error(
            "half-integer magnetization is defined for 2m >= -1");
    if (twice_m == -1)
        return std::sqrt(2.0);
    if (twice_m % 2 == 0)
        return zigzag_magnetization_exact(static_cast<std::size_t>(twice_m / 2));
    // M_{m+1/2} = sqrt(2) D_{2m+1} / M_m with 2m+1 = twice_m.
    return std::sqrt(2.0) *
           wu_diagonal(static_cast<std::size_t>(twice_m)) /
           half_integer_magnetization(twice_m - 1);
}

double SpinorField::value(long long k, long long s) const {
    if (k < -K || k > K || s < 0 || s > S)
        throw size_error("spinor value requested outside the grid");
    return values[static_cast<std::size_t>((k + K) * (S + 1) + s)];
}

namespace {

// Integrals I(k, s) = (1/pi) int_0^pi cos(kt) y(t)^s P_n(cos t) dt for all
// k in [0, K], s in [0, S], at a fixed Gauss-Legendre order per half panel.
std::vector<double> spinor_integrals(long long n, long long K, long long S,
                                     std::size_t order) {
    std::vector<double> gx, gw;
    gauss_legendre(order, gx, gw);

    std::vector<double> out(static_cast<std::size_t>((K + 1) * (S + 1)), 0.0);
    // Two panels split at pi/2 where y crosses zero.
    for (int panel = 0; panel < 2; ++panel) {
        const double lo = panel == 0 ? 0.0 : 0.5 * kPi;
        for (std::size_t i = 0; i < order; ++i) {
            const double t = lo + 0.25 * kPi * (gx[i] + 1.0);
            const double wq = gw[i] * 0.25 * kPi / kPi;
            const double ct = std::cos(t);
            const double y = ct / (1.0 + std::sin(t));
            // Legendre value P_n(cos t) by the three-term recurrence.
            double p_prev = 1.0, p = ct;
            if (n == 0)
                p = 1.0;
            for (long long j = 2; j <= n; ++j) {
                const double jj = static_cast<double>(j);
                const double p_next =
                    ((2.0 * jj - 1.0) * ct * p - (jj - 1.0) * p_prev) / jj;
                p_prev = p;
                p = p_next;
            }
            double ys = 1.0;
            for (long long s = 0; s <= S; ++s) {
                const double base = wq * ys * p;
                for (long long k = 0; k <= K; ++k)
                    out[static_cast<std::size_t>(k * (S + 1) + s)] +=
                        base * std::cos(static_cast<double>(k) * t);
                ys *= y;
            }
        }
    }
    return out;
}

} // namespace

SpinorField legendre_spinor(long long n, long long K, long long S) {
    if (n < 0)
        throw domain_error("legendre_spinor: branch order must be >= 0");
    if (K < n + 2 || S < 2)
        throw size_error("legendre_spinor needs K >= n+2 and S >= 2");

    std::vector<double> integrals;
    std::size_t order = 64;
    for (;; order *= 2) {
        std::vector<double> trial = spinor_integrals(n, K, S, order);
        if (!integrals.empty()) {
            double worst = 0.0;
            for (std::size_t i = 0; i < trial.size(); ++i)
                worst = std::max(worst, std::fabs(trial[i] - integrals[i]));
            if (worst <= 1e-13) {
                integrals = std::move(trial);
                break;
            }
        }
        integrals = std::move(trial);
        if (order > (1u << 12))
            throw numeric_error(
                "legendre_spinor: panel quadrature did not stabilize");
    }

    const double raw_branch =
        integrals[static_cast<std::size_t>(n * (S + 1))];
    if (std::fabs(raw_branch) < 1e-14)
        throw numeric_error("legendre_spinor: vanishing branch value");
    SpinorField f;
    f.n = n;
    f.K = K;
    f.S = S;
    f.c_n = wu_diagonal(static_cast<std::size_t>(n)) / raw_branch;
    f.values.assign(static_cast<std::size_t>((2 * K + 1) * (S + 1)), 0.0);
    for (long long k = -K; k <= K; ++k)
        for (long long s = 0; s <= S; ++s) {
            if ((k + s + n) % 2 != 0)
                continue; // off-parity sites stay zero structurally
            const long long ak = k < 0 ? -k : k;
            f.values[static_cast<std::size_t>((k + K) * (S + 1) + s)] =
                f.c_n *
                integrals[static_cast<std::size_t>(ak * (S + 1) + s)];
        }
    return f;
}

LaplacianReport spinor_laplacian_residuals(const SpinorField& f) {
    LaplacianReport rep;
    auto v = [&f](long long k, long long s) {
        if (s == -1)
            s = 1; // reflection across the boundary row
        return f.value(k, s);
    };
    auto stencil = [&](long long k, long long s) {
        return -v(k, s) + 0.25 * (v(k - 1, s - 1) + v(k + 1, s - 1) +
                                  v(k - 1, s + 1) + v(k + 1, s + 1));
    };
    for (long long s = 1; s < f.S; ++s)
        for (long long k = -f.K + 1; k <= f.K - 1; ++k) {
            if ((k + s + f.n) % 2 != 0)
                continue;
            rep.interior_max =
                std::max(rep.interior_max, std::fabs(stencil(k, s)));
        }
    // On the boundary row the plain stencil vanishes only strictly between
    // the branch points. Outside them the field lives on a double cover:
    // V(k, 0) = 0 there and harmonicity holds with opposite signs of the
    // s = +-1 rows on the two sheets, so the single-sheet residual is not
    // expected to vanish for |k| > n.
    for (long long k = -f.n + 1; k <= f.n - 1; ++k) {
        if ((k + f.n) % 2 != 0)
            continue;
        rep.boundary_row_max =
            std::max(rep.boundary_row_max, std::fabs(stencil(k, 0)));
    }
    rep.branch_plus = stencil(f.n, 0);
    rep.branch_minus = stencil(-f.n, 0);
    return rep;
}

AsymptoticsReport diagonal_asymptotics_check(std::size_t n) {
    if (n < 10)
        throw domain_error(
            "diagonal_asymptotics_check is meaningful only for n >= 10");
    const double cs = critical::c_sigma();
    AsymptoticsReport rep;
    rep.d_ratio = std::exp(wu_diagonal_log(n) +
                           0.25 * std::log(2.0 * static_cast<double>(n))) /
                  (cs * cs);
    rep.m_ratio = std::exp(zigzag_magnetization_log(n) +
                           0.125 * std::log(2.0 * static_cast<double>(n))) /
                  (std::pow(2.0, 0.125) * cs);
    return rep;
}

} // namespace zzi::exact
