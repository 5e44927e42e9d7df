#include "zzi/tridiag.hpp"

#include <cmath>
#include <string>

#include "zzi/errors.hpp"

namespace zzi {

JacobiOperator build_jacobi(const AngleSequence& angles, std::size_t N) {
    if (N < 1)
        throw size_error("build_jacobi requires N >= 1");
    if (N > angles.max_truncation())
        throw size_error("truncation N = " + std::to_string(N) +
                         " needs angles up to index " + std::to_string(2 * N) +
                         ", but only " + std::to_string(angles.max_index()) +
                         " are available");
    JacobiOperator J;
    J.diag.resize(N);
    J.offdiag.resize(N - 1);
    for (std::size_t k = 1; k <= N; ++k) {
        const double c1 = std::cos(angles.theta(2 * k - 1));
        const double c2 = std::cos(angles.theta(2 * k));
        const double s0 = std::sin(angles.theta(2 * k - 2));
        const double s1 = std::sin(angles.theta(2 * k - 1));
        J.diag[k - 1] = c1 * c1 * c2 * c2 + s0 * s0 * s1 * s1;
        if (k < N) {
            const double s2 = std::sin(angles.theta(2 * k));
            const double s3 = std::sin(angles.theta(2 * k + 1));
            J.offdiag[k - 1] = c1 * c2 * s2 * s3;
        }
    }
    return J;
}

BidiagonalOperator build_d_even(const AngleSequence& angles, std::size_t N) {
    if (N < 1)
        throw size_error("build_d_even requires N >= 1");
    if (N > angles.max_truncation())
        throw size_error("truncation N = " + std::to_string(N) +
                         " needs angles up to index " + std::to_string(2 * N) +
                         ", but only " + std::to_string(angles.max_index()) +
                         " are available");
    BidiagonalOperator D;
    D.diag.resize(N);
    D.subdiag.resize(N - 1);
    for (std::size_t k = 1; k <= N; ++k) {
        D.diag[k - 1] =
            std::cos(angles.theta(2 * k - 1)) * std::cos(angles.theta(2 * k));
        if (k < N)
            D.subdiag[k - 1] = std::sin(angles.theta(2 * k)) *
                               std::sin(angles.theta(2 * k + 1));
    }
    return D;
}

JacobiOperator jacobi_from_bidiagonal(const BidiagonalOperator& D) {
    const std::size_t N = D.size();
    JacobiOperator J;
    J.diag.resize(N);
    J.offdiag.resize(N ? N - 1 : 0);
    for (std::size_t k = 0; k < N; ++k) {
        const double prev = k > 0 ? D.subdiag[k - 1] : 0.0;
        J.diag[k] = D.diag[k] * D.diag[k] + prev * prev;
        if (k + 1 < N)
            J.offdiag[k] = D.diag[k] * D.subdiag[k];
    }
    return J;
}

std::vector<double> tridiag_apply(const JacobiOperator& J,
                                  const std::vector<double>& x) {
    const std::size_t N = J.size();
    if (x.size() != N)
        throw size_error("tridiag_apply: vector length mismatch");
    std::vector<double> y(N);
    for (std::size_t i = 0; i < N; ++i) {
        double v = J.diag[i] * x[i];
        if (i > 0)
            v += J.offdiag[i - 1] * x[i - 1];
        if (i + 1 < N)
            v += J.offdiag[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

MomentTable moments(const JacobiOperator& J, std::size_t P) {
    if (J.size() < P + 1)
        throw size_error("moments of order " + std::to_string(P) +
                         " need a truncation of size >= " +
                         std::to_string(P + 1) + ", got " +
                         std::to_string(J.size()));
    MomentTable t;
    t.mu.resize(P + 1);
    std::vector<double> v(J.size(), 0.0);
    v[0] = 1.0;
    t.mu[0] = 1.0;
    for (std::size_t p = 1; p <= P; ++p) {
        v = tridiag_apply(J, v);
        t.mu[p] = v[0];
    }
    return t;
}

} // namespace zzi
