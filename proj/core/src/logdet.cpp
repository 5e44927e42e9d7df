#include "zzi/logdet.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zzi/eigen.hpp"
#include "zzi/errors.hpp"

namespace zzi {

double LogDet::value() const {
    return sign == 0 ? 0.0 : sign * std::exp(log_abs);
}

LogDet dense_logdet(std::vector<double> a, std::size_t n) {
    if (n == 0)
        return {1, 0.0}; // empty determinant
    if (a.size() != n * n)
        throw size_error("dense_logdet: storage size mismatch");

    LogDet out{1, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::fabs(a[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::fabs(a[r * n + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0)
            return {0, -std::numeric_limits<double>::infinity()};
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[piv * n + j], a[col * n + j]);
            out.sign = -out.sign;
        }
        const double pivot = a[col * n + col];
        if (pivot < 0.0)
            out.sign = -out.sign;
        out.log_abs += std::log(std::fabs(pivot));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r * n + col] / pivot;
            if (factor == 0.0)
                continue;
            for (std::size_t j = col + 1; j < n; ++j)
                a[r * n + j] -= factor * a[col * n + j];
        }
    }
    return out;
}

LogDet hankel_logdet(const std::vector<double>& mu, std::size_t m) {
    if (m == 0)
        return {1, 0.0};
    if (mu.size() < 2 * m - 1)
        throw size_error("hankel_logdet of order " + std::to_string(m) +
                         " needs moments up to order " +
                         std::to_string(2 * m - 2));
    std::vector<double> a(m * m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            a[p * m + q] = mu[p + q];
    return dense_logdet(std::move(a), m);
}

LogDet hankel_logdet(const MomentTable& table, std::size_t m) {
    return hankel_logdet(table.mu, m);
}

LogDet sqrt_minor_logdet(const JacobiOperator& J, std::size_t m) {
    if (m == 0)
        return {1, 0.0};
    const std::size_t N = J.size();
    if (N < m)
        throw size_error("sqrt_minor_logdet: minor size exceeds truncation");

    std::vector<double> lam, z;
    tridiag_eigen(J.diag, J.offdiag, lam, &z, m);
    // Eigenvalues at round-off level are genuine kernel modes of the
    // truncated operator computed with O(eps) noise; sqrt would amplify
    // that noise to ~1e-8, which swamps exponentially small minors in the
    // gapped-boundary regime. Clamp them to an exact zero instead.
    std::vector<double> s(N);
    for (std::size_t k = 0; k < N; ++k) {
        if (lam[k] < -1e-10)
            throw numeric_error(
                "sqrt_minor_logdet: eigenvalue " + std::to_string(lam[k]) +
                " violates the operator inequality 0 <= J <= 1");
        s[k] = lam[k] > 1e-13 ? std::sqrt(lam[k]) : 0.0;
    }

    std::vector<double> b(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            double acc = 0.0;
            const double* zi = z.data() + i * N;
            const double* zj = z.data() + j * N;
            for (std::size_t k = 0; k < N; ++k)
                acc += s[k] * zi[k] * zj[k];
            b[i * m + j] = acc;
            b[j * m + i] = acc;
        }
    return dense_logdet(std::move(b), m);
}

LogDet polar_minor_logdet(const BidiagonalOperator& D, std::size_t m) {
    if (m == 0)
        return {1, 0.0};
    const std::size_t N = D.size();
    if (N < m)
        throw size_error("polar_minor_logdet: minor size exceeds truncation");

    const JacobiOperator J = jacobi_from_bidiagonal(D);
    const std::size_t rows = std::min(m + 1, N);
    std::vector<double> lam, z;
    tridiag_eigen(J.diag, J.offdiag, lam, &z, rows);

    // (D D^T)^{-1/2} is taken in the pseudo-inverse sense: supercritical
    // sequences put a genuine kernel vector into J = D D^T, and dropping
    // near-null modes is exact there because D^T annihilates that kernel,
    // so those modes never contribute to D^T (D D^T)^{-1/2}.
    std::vector<double> inv_s(N);
    for (std::size_t k = 0; k < N; ++k) {
        if (lam[k] < -1e-6)
            throw numeric_error(
                "polar_minor_logdet: eigenvalue " + std::to_string(lam[k]) +
                " violates the operator inequality 0 <= J <= 1");
        inv_s[k] = lam[k] > 1e-12 ? 1.0 / std::sqrt(lam[k]) : 0.0;
    }

    // X = (D D^T)^{-1/2} restricted to the rows/columns entering the minor.
    std::vector<double> x(rows * m);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            double acc = 0.0;
            const double* zi = z.data() + i * N;
            const double* zj = z.data() + j * N;
            for (std::size_t k = 0; k < N; ++k)
                acc += inv_s[k] * zi[k] * zj[k];
            x[i * m + j] = acc;
        }

    // U = D^T X: U_ij = d_i X_ij + s_i X_{i+1,j} (0-based rows of D^T).
    std::vector<double> u(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            double v = D.diag[i] * x[i * m + j];
            if (i + 1 < rows)
                v += D.subdiag[i] * x[(i + 1) * m + j];
            u[i * m + j] = v;
        }
    LogDet ld = dense_logdet(std::move(u), m);
    if (ld.sign != 0)
        ld.sign = 1; // |det|: the isometry factor enters in absolute value
    return ld;
}

} // namespace zzi
