#include "zzi/layered.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>

#include "zzi/critical.hpp"
#include "zzi/eigen.hpp"
#include "zzi/errors.hpp"
#include "zzi/logdet.hpp"

namespace zzi::layered {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double evaluate_at(const AngleSequence& angles, std::size_t m, Method method,
                   std::size_t N) {
    switch (method) {
    case Method::Sqrt: {
        const JacobiOperator J = build_jacobi(angles, N);
        const LogDet ld = sqrt_minor_logdet(J, m);
        double log_cos = 0.0;
        for (std::size_t k = 1; k <= 2 * m; ++k)
            log_cos += std::log(std::cos(angles.theta(k)));
        return ld.sign * std::exp(ld.log_abs - log_cos);
    }
    case Method::Polar: {
        const BidiagonalOperator D = build_d_even(angles, N);
        const LogDet ld = polar_minor_logdet(D, m);
        return ld.sign == 0 ? 0.0 : std::exp(ld.log_abs);
    }
    case Method::Hankel: {
        // Each Hankel determinant is the product of the squared monic
        // orthogonal-polynomial norms of its measure; computing the norms by
        // the Stieltjes procedure on the spectral quadrature sidesteps the
        // catastrophic conditioning of the raw moment matrices when the
        // spectral measure is concentrated.
        const JacobiOperator J = build_jacobi(angles, N);
        const SpectralQuadrature q = spectral_quadrature(J);
        std::vector<double> w0(N), wh(N), w1(N);
        for (std::size_t i = 0; i < N; ++i) {
            // Kernel nodes carry O(eps) noise; sqrt would amplify it, so
            // they are clamped to an exact zero (cf. sqrt_minor_logdet).
            const double lam = q.nodes[i] > 1e-13 ? q.nodes[i] : 0.0;
            w0[i] = q.weights[i];
            wh[i] = std::sqrt(lam) * q.weights[i];
            w1[i] = lam * q.weights[i];
        }
        const auto n0 = critical::stieltjes_norms(q.nodes, w0, m - 1);
        const auto nh = critical::stieltjes_norms(q.nodes, wh, m - 1);
        const auto n1 = critical::stieltjes_norms(q.nodes, w1, m - 1);
        double log_ratio = 0.0;
        for (std::size_t k = 0; k < m; ++k)
            log_ratio +=
                std::log(nh[k]) - 0.5 * (std::log(n0[k]) + std::log(n1[k]));
        return std::exp(log_ratio);
    }
    }
    return 0.0; // unreachable
}

} // namespace

std::string method_name(Method m) {
    switch (m) {
    case Method::Sqrt:
        return "sqrt";
    case Method::Hankel:
        return "hankel";
    case Method::Polar:
        return "polar";
    }
    return "?";
}

MagnetizationReport magnetization(const AngleSequence& angles, std::size_t m,
                                  Method method, double tol,
                                  std::size_t n_override) {
    if (m == 0)
        return {0, 1.0, method, 0, 0.0};
    if (method == Method::Hankel && m > 12)
        throw domain_error(
            "hankel path is limited to m <= 12 (moment-matrix conditioning); "
            "use the sqrt path for larger m");

    const std::size_t n_cap = angles.max_truncation();
    if (n_cap < 2 * m + 2)
        throw size_error("angle list too short for m = " + std::to_string(m) +
                         ": need at least " + std::to_string(2 * (2 * m + 2)) +
                         " angles");

    if (n_override > 0) {
        if (n_override > n_cap)
            throw size_error("requested truncation exceeds available angles");
        const double v = evaluate_at(angles, m, method, n_override);
        return {m, v, method, n_override, 0.0};
    }

    // A finite explicit list defines a finite operator: evaluate it exactly.
    if (angles.kind() == AngleKind::ExplicitList) {
        const double v = evaluate_at(angles, m, method, n_cap);
        return {m, v, method, n_cap, 0.0};
    }

    std::size_t N = std::max<std::size_t>(64, 8 * m);
    std::vector<double> vals;
    double prev_ext = 0.0;
    bool have_prev_ext = false;
    for (;;) {
        const double v = evaluate_at(angles, m, method, N);
        vals.push_back(v);
        const std::size_t c = vals.size();
        if (c >= 3) {
            const double den = vals[c - 1] - 2.0 * vals[c - 2] + vals[c - 3];
            if (std::fabs(den) > 1e-300) {
                const double step = vals[c - 1] - vals[c - 2];
                const double ext = vals[c - 1] - step * step / den;
                if (have_prev_ext) {
                    const double ediff = std::fabs(ext - prev_ext);
                    if (ediff <= tol * std::max(std::fabs(ext), 1.0))
                        return {m, ext, method, N, ediff};
                }
                prev_ext = ext;
                have_prev_ext = true;
            }
        }
        if (c >= 2) {
            // Values live on [0, 1], so the tolerance is applied on the unit
            // scale: a relative certificate for the exponentially small
            // ordered-phase values would demand precision below round-off.
            const double diff = std::fabs(vals[c - 1] - vals[c - 2]);
            if (diff <= tol * std::max(std::fabs(v), 1.0))
                return {m, v, method, N, diff};
        }
        if (N >= 16384) {
            std::ostringstream os;
            os.precision(17);
            os << "magnetization (m = " << m << ", " << method_name(method)
               << ") not converged to " << tol << " at N = 16384; last "
               << "iterates " << vals[vals.size() - 2] << ", " << vals.back();
            throw numeric_error(os.str());
        }
        N *= 2;
    }
}

double kernel_residual_homogeneous(double theta, std::size_t N) {
    check_angle(theta, 1);
    if (theta <= kPi / 4.0)
        throw domain_error(
            "kernel vector (cot theta)^{2k} is square-summable only for "
            "theta > pi/4");
    if (N < 2)
        throw size_error("kernel_residual_homogeneous requires N >= 2");

    const AngleSequence seq = AngleSequence::homogeneous(theta);
    const BidiagonalOperator D = build_d_even(seq, N);
    const double t = 1.0 / (std::tan(theta) * std::tan(theta)); // cot^2
    // psi_k = (cot theta)^{2k}, scaled so the largest component is 1.
    std::vector<double> psi(N + 1);
    psi[0] = 1.0;
    for (std::size_t k = 1; k <= N; ++k)
        psi[k] = psi[k - 1] * t;
    double worst = 0.0;
    // Interior rows only: row N needs psi_{N+1}, beyond the truncation.
    for (std::size_t k = 0; k + 1 < N; ++k) {
        const double r = D.diag[k] * psi[k] - D.subdiag[k] * psi[k + 1];
        worst = std::max(worst, std::fabs(r));
    }
    return worst;
}

CriticalityReport periodic_criticality(const std::vector<double>& block) {
    if (block.empty() || block.size() % 2 != 0)
        throw size_error("period block must have even, positive length");
    double product = 1.0;
    for (std::size_t i = 0; i < block.size(); ++i) {
        check_angle(block[i], i + 1);
        product *= std::tan(block[i]);
    }
    return {product, std::fabs(product - 1.0) <= 1e-12};
}

namespace {

// theta_i of the periodized block with 1-based index i (i = 0 wraps to 2n).
double block_theta(const std::vector<double>& block, long long i) {
    const long long L = static_cast<long long>(block.size());
    long long j = (i - 1) % L;
    if (j < 0)
        j += L;
    return block[static_cast<std::size_t>(j)];
}

void require_critical(const std::vector<double>& block) {
    const CriticalityReport rep = periodic_criticality(block);
    if (!rep.critical) {
        std::ostringstream os;
        os.precision(17);
        os << "period block is not critical: prod tan(theta) = "
           << rep.product;
        throw precondition_error(os.str());
    }
}

} // namespace

void periodic_entries(const std::vector<double>& block, std::vector<double>& b,
                      std::vector<double>& a) {
    if (block.empty() || block.size() % 2 != 0)
        throw size_error("period block must have even, positive length");
    const std::size_t n = block.size() / 2;
    b.resize(n);
    a.resize(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const long long kk = static_cast<long long>(k);
        const double c1 = std::cos(block_theta(block, 2 * kk - 1));
        const double c2 = std::cos(block_theta(block, 2 * kk));
        const double s0 = std::sin(block_theta(block, 2 * kk - 2));
        const double s1 = std::sin(block_theta(block, 2 * kk - 1));
        const double s2 = std::sin(block_theta(block, 2 * kk));
        const double s3 = std::sin(block_theta(block, 2 * kk + 1));
        b[k - 1] = c1 * c1 * c2 * c2 + s0 * s0 * s1 * s1;
        a[k - 1] = c1 * c2 * s2 * s3;
    }
}

std::vector<double> ground_vector(const std::vector<double>& block) {
    require_critical(block);
    const std::size_t n = block.size() / 2;
    std::vector<double> psi(n + 1);
    double cot_prod = 1.0; // prod_{p=1}^{2k-2} cot(theta_p)
    for (std::size_t k = 1; k <= n + 1; ++k) {
        psi[k - 1] =
            cot_prod / std::sin(block_theta(block, 2 * (long long)k - 1));
        cot_prod /= std::tan(block_theta(block, 2 * (long long)k - 1));
        cot_prod /= std::tan(block_theta(block, 2 * (long long)k));
    }
    return psi;
}

double cj_from_kernel(const std::vector<double>& block,
                      const std::vector<double>& psi) {
    const std::size_t n = block.size() / 2;
    if (psi.size() < n + 1)
        throw size_error("kernel vector must hold n+1 components");
    std::vector<double> b, a;
    periodic_entries(block, b, a);
    double sum_sq = 0.0, sum_inv = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sum_sq += psi[k] * psi[k];
        sum_inv += 1.0 / (a[k] * psi[k] * psi[k + 1]);
    }
    return std::sqrt(sum_sq * sum_inv) / static_cast<double>(n);
}

double cj_constant(const std::vector<double>& block) {
    return cj_from_kernel(block, ground_vector(block));
}

namespace {

// Number of eigenvalues < lam of the tridiagonal-plus-corner matrix, by the
// inertia of the LDL^T factorization with last-row fill-in tracking.
std::size_t count_below(const std::vector<double>& d,
                        const std::vector<double>& e, double corner,
                        double lam) {
    const std::size_t M = d.size();
    std::size_t neg = 0;
    double f = corner;            // current (M-1, i) entry
    double dm = d[M - 1] - lam;   // running last pivot
    double x = d[0] - lam;
    for (std::size_t i = 0; i + 2 < M; ++i) {
        if (x < 0.0)
            ++neg;
        if (x == 0.0)
            x = 1e-300;
        dm -= f * f / x;
        const double fn = -f * e[i] / x;
        x = d[i + 1] - lam - e[i] * e[i] / x;
        f = fn;
    }
    if (x < 0.0)
        ++neg;
    if (x == 0.0)
        x = 1e-300;
    const double g = e[M - 2] + f;
    dm -= g * g / x;
    if (dm < 0.0)
        ++neg;
    return neg;
}

} // namespace

IdsReport ids_empirical(const std::vector<double>& block,
                        std::size_t n_periods,
                        const std::vector<double>& lambda_grid) {
    require_critical(block);
    if (n_periods < 64)
        throw size_error("ids_empirical requires at least 64 periods");
    if (lambda_grid.empty())
        throw size_error("ids_empirical: empty lambda grid");

    const std::size_t n = block.size() / 2;
    std::vector<double> b, a;
    periodic_entries(block, b, a);
    const std::size_t M = n_periods * n;
    std::vector<double> d(M), e(M - 1);
    for (std::size_t i = 0; i < M; ++i)
        d[i] = b[i % n];
    for (std::size_t i = 0; i + 1 < M; ++i)
        e[i] = a[i % n];
    const double corner = a[n - 1];

    IdsReport rep;
    rep.lambdas = lambda_grid;
    rep.ids.resize(lambda_grid.size());
    for (std::size_t j = 0; j < lambda_grid.size(); ++j)
        rep.ids[j] = static_cast<double>(
                         count_below(d, e, corner, lambda_grid[j])) /
                     static_cast<double>(M);

    double lam_max = 0.0;
    for (double lam : lambda_grid)
        lam_max = std::max(lam_max, lam);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t j = 0; j < lambda_grid.size(); ++j) {
        const double lam = lambda_grid[j];
        if (lam <= 0.0 || lam > 0.1 * lam_max)
            continue;
        const double wgt = 1.0 / std::sqrt(lam);
        const double xj = std::sqrt(lam) / kPi;
        sxy += wgt * xj * rep.ids[j];
        sxx += wgt * xj * xj;
    }
    if (sxx == 0.0)
        throw numeric_error("ids_empirical: no grid points in the fit window");
    rep.slope = sxy / sxx;
    return rep;
}

double twisted_lowest_eigenvalue(const std::vector<double>& block, double t) {
    require_critical(block);
    if (std::fabs(t) > kPi)
        throw domain_error("quasi-momentum t must satisfy |t| <= pi");

    const std::size_t n = block.size() / 2;
    std::vector<double> b, a;
    periodic_entries(block, b, a);

    if (n == 1) {
        const double v = b[0] - 2.0 * a[0] * std::cos(t);
        return (v < 0.0 && v > -1e-12) ? 0.0 : v;
    }

    std::vector<std::complex<double>> h(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
        h[k * n + k] = b[k];
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k * n + k + 1] -= a[k];
        h[(k + 1) * n + k] -= a[k];
    }
    const std::complex<double> tw(std::cos(t), -std::sin(t));
    h[0 * n + (n - 1)] -= a[n - 1] * tw;
    h[(n - 1) * n + 0] -= a[n - 1] * std::conj(tw);

    // Real symmetric embedding [[Re, -Im], [Im, Re]] of the Hermitian block;
    // each eigenvalue appears twice.
    const std::size_t N2 = 2 * n;
    std::vector<double> s(N2 * N2, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double re = h[i * n + j].real();
            const double im = h[i * n + j].imag();
            s[i * N2 + j] = re;
            s[(i + n) * N2 + (j + n)] = re;
            s[i * N2 + (j + n)] = -im;
            s[(i + n) * N2 + j] = im;
        }
    const std::vector<double> vals = symmetric_eigenvalues(std::move(s), N2);
    const double v = vals[0];
    return (v < 0.0 && v > -1e-12) ? 0.0 : v;
}

} // namespace zzi::layered
