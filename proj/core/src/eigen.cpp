#include "zzi/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "zzi/errors.hpp"

namespace zzi {

void tridiag_eigen(std::vector<double> d, std::vector<double> e_in,
                   std::vector<double>& values, std::vector<double>* z,
                   std::size_t zrows) {
    const int n = static_cast<int>(d.size());
    if (n == 0)
        throw size_error("tridiag_eigen: empty matrix");
    if (e_in.size() + 1 != d.size())
        throw size_error("tridiag_eigen: off-diagonal length mismatch");

    std::vector<double> e(n, 0.0);
    for (int i = 0; i < n - 1; ++i)
        e[i] = e_in[i];

    if (z) {
        z->assign(zrows * n, 0.0);
        for (std::size_t r = 0; r < std::min<std::size_t>(zrows, n); ++r)
            (*z)[r * n + r] = 1.0;
    }

    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw numeric_error(
                        "implicit-shift QL did not converge after 60 "
                        "iterations at row " +
                        std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (std::size_t k = 0; k < zrows; ++k) {
                            double* row = z->data() + k * n;
                            f = row[i + 1];
                            row[i + 1] = s * row[i] + c * f;
                            row[i] = c * row[i] - s * f;
                        }
                    }
                }
                if (r == 0.0 && i >= l)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&d](int a, int b) { return d[a] < d[b]; });
    values.resize(n);
    for (int j = 0; j < n; ++j)
        values[j] = d[idx[j]];
    if (z && zrows > 0) {
        std::vector<double> sorted(zrows * n);
        for (std::size_t r = 0; r < zrows; ++r)
            for (int j = 0; j < n; ++j)
                sorted[r * n + j] = (*z)[r * n + idx[j]];
        z->swap(sorted);
    }
}

SpectralQuadrature spectral_quadrature(const JacobiOperator& J) {
    SpectralQuadrature q;
    std::vector<double> z;
    tridiag_eigen(J.diag, J.offdiag, q.nodes, &z, 1);
    const std::size_t N = J.size();
    q.weights.resize(N);
    for (std::size_t i = 0; i < N; ++i)
        q.weights[i] = z[i] * z[i];
    return q;
}

void gauss_legendre(std::size_t n, std::vector<double>& x,
                    std::vector<double>& w) {
    if (n == 0)
        throw size_error("gauss_legendre: order must be positive");
    std::vector<double> d(n, 0.0), e(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        e[k - 1] = kk / std::sqrt(4.0 * kk * kk - 1.0);
    }
    std::vector<double> z;
    tridiag_eigen(std::move(d), std::move(e), x, &z, 1);
    w.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = 2.0 * z[i] * z[i];
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a,
                                          std::size_t n) {
    if (n == 0)
        throw size_error("symmetric_eigenvalues: empty matrix");
    if (a.size() != n * n)
        throw size_error("symmetric_eigenvalues: storage size mismatch");

    // Householder reduction to tridiagonal form (values-only variant).
    std::vector<double> d(n, 0.0), e(n, 0.0);
    for (int i = static_cast<int>(n) - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k)
                scale += std::fabs(a[i * n + k]);
            if (scale == 0.0) {
                e[i] = a[i * n + l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                double f = a[i * n + l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k)
                        g += a[j * n + k] * a[i * n + k];
                    for (int k = j + 1; k <= l; ++k)
                        g += a[k * n + j] * a[i * n + k];
                    e[j] = g / h;
                    f += e[j] * a[i * n + j];
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i * n + j];
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (int k = 0; k <= j; ++k)
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        d[i] = a[i * n + i];

    std::vector<double> off(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        off[i] = e[i + 1];
    std::vector<double> values;
    tridiag_eigen(std::move(d), std::move(off), values);
    return values;
}

} // namespace zzi
