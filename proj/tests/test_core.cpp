#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "zzi/angles.hpp"
#include "zzi/eigen.hpp"
#include "zzi/errors.hpp"
#include "zzi/logdet.hpp"
#include "zzi/tridiag.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

double max_abs_diff(const zzi::JacobiOperator& A, const zzi::JacobiOperator& B) {
    double d = 0.0;
    for (std::size_t k = 0; k < A.diag.size(); ++k)
        d = std::max(d, std::fabs(A.diag[k] - B.diag[k]));
    for (std::size_t k = 0; k < A.offdiag.size(); ++k)
        d = std::max(d, std::fabs(A.offdiag[k] - B.offdiag[k]));
    return d;
}

std::vector<double> random_angles(std::mt19937& rng, std::size_t count) {
    std::uniform_real_distribution<double> dist(0.1, kPi / 2 - 0.1);
    std::vector<double> v(count);
    for (double& t : v)
        t = dist(rng);
    return v;
}

} // namespace

TEST_SUITE("core") {

TEST_CASE("angle/weight round trip") {
    for (double theta : {0.1, 0.5, kPi / 4, 1.2, 1.5}) {
        CHECK(zzi::theta_from_x(zzi::x_from_theta(theta)) ==
              doctest::Approx(theta).epsilon(1e-15));
        CHECK(zzi::x_from_theta(theta) == doctest::Approx(std::tan(theta / 2)));
    }
    CHECK(zzi::betaj_from_theta(kPi / 2) == doctest::Approx(0.0));
}

TEST_CASE("angle sequence kinds and theta_0 convention") {
    const auto h = zzi::AngleSequence::homogeneous(0.7);
    CHECK(h.theta(0) == 0.0);
    CHECK(h.theta(1) == 0.7);
    CHECK(h.theta(12345) == 0.7);

    const auto hf = zzi::AngleSequence::homogeneous_with_first(0.3, 0.7);
    CHECK(hf.theta(1) == 0.3);
    CHECK(hf.theta(2) == 0.7);

    const auto p = zzi::AngleSequence::periodic({0.4, 0.9});
    CHECK(p.theta(1) == 0.4);
    CHECK(p.theta(2) == 0.9);
    CHECK(p.theta(3) == 0.4);

    const auto e = zzi::AngleSequence::explicit_list({0.4, 0.9, 1.1});
    CHECK(e.theta(3) == 1.1);
    CHECK_THROWS_AS((void)e.theta(4), zzi::size_error);

    const auto hx = zzi::AngleSequence::homogeneous_x(std::tan(kPi / 8));
    CHECK(hx.theta(1) == doctest::Approx(kPi / 4).epsilon(1e-15));
}

TEST_CASE("degenerate angles are rejected with the offending index") {
    CHECK_THROWS_AS(zzi::AngleSequence::homogeneous(0.0), zzi::domain_error);
    CHECK_THROWS_AS(zzi::AngleSequence::homogeneous(kPi / 2),
                    zzi::domain_error);
    try {
        zzi::AngleSequence::explicit_list({0.4, 1.7});
        CHECK(false);
    } catch (const zzi::domain_error& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("build_jacobi at theta = pi/4") {
    const auto J =
        zzi::build_jacobi(zzi::AngleSequence::homogeneous(kPi / 4), 3);
    CHECK(J.diag[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(J.diag[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(J.diag[2] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(J.offdiag[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(J.offdiag[1] == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("build_jacobi homogeneous closed form") {
    const double th = 0.6;
    const double c = std::cos(th), s = std::sin(th);
    const auto J = zzi::build_jacobi(zzi::AngleSequence::homogeneous(th), 5);
    CHECK(J.diag[0] == doctest::Approx(std::pow(c, 4)).epsilon(1e-14));
    for (std::size_t k = 1; k < 5; ++k)
        CHECK(J.diag[k] ==
              doctest::Approx(std::pow(c, 4) + std::pow(s, 4)).epsilon(1e-14));
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(J.offdiag[k] == doctest::Approx(c * c * s * s).epsilon(1e-14));
}

TEST_CASE("build_jacobi first entry of the pi/6, pi/3 block") {
    const auto J = zzi::build_jacobi(
        zzi::AngleSequence::periodic({kPi / 6, kPi / 3}), 4);
    CHECK(J.diag[0] == doctest::Approx(3.0 / 16.0).epsilon(1e-15));
}

TEST_CASE("build_d_even and the factorization D D^T = J") {
    const auto seq = zzi::AngleSequence::homogeneous(kPi / 4);
    const auto D = zzi::build_d_even(seq, 4);
    for (double d : D.diag)
        CHECK(d == doctest::Approx(0.5).epsilon(1e-15));
    for (double s : D.subdiag)
        CHECK(s == doctest::Approx(0.5).epsilon(1e-15));

    std::mt19937 rng(7);
    for (std::size_t trial = 0; trial < 5; ++trial) {
        const auto angles =
            zzi::AngleSequence::explicit_list(random_angles(rng, 20));
        const auto Dr = zzi::build_d_even(angles, 8);
        const auto Jr = zzi::build_jacobi(angles, 8);
        CHECK(max_abs_diff(zzi::jacobi_from_bidiagonal(Dr), Jr) <= 1e-14);
    }
}

TEST_CASE("factorization identity holds up to N = 512") {
    std::mt19937 rng(11);
    const auto block = random_angles(rng, 6);
    const auto angles = zzi::AngleSequence::periodic(block);
    for (std::size_t N : {16u, 128u, 512u}) {
        const auto D = zzi::build_d_even(angles, N);
        const auto J = zzi::build_jacobi(angles, N);
        CHECK(max_abs_diff(zzi::jacobi_from_bidiagonal(D), J) <= 1e-13);
    }
}

TEST_CASE("moments of the pi/4 operator") {
    const auto J =
        zzi::build_jacobi(zzi::AngleSequence::homogeneous(kPi / 4), 12);
    const auto mu = zzi::moments(J, 10);
    CHECK(mu.mu[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(mu.mu[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(mu.mu[2] == doctest::Approx(0.125).epsilon(1e-15));
    for (std::size_t p = 1; p < mu.mu.size(); ++p)
        CHECK(mu.mu[p] <= mu.mu[p - 1] + 1e-15);
    CHECK_THROWS_AS(zzi::moments(J, 12), zzi::size_error);
}

TEST_CASE("spectral quadrature basics") {
    zzi::JacobiOperator single;
    single.diag = {0.37};
    const auto q1 = zzi::spectral_quadrature(single);
    REQUIRE(q1.nodes.size() == 1);
    CHECK(q1.nodes[0] == doctest::Approx(0.37).epsilon(1e-15));
    CHECK(q1.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

    const auto J =
        zzi::build_jacobi(zzi::AngleSequence::homogeneous(kPi / 4), 200);
    const auto q = zzi::spectral_quadrature(J);
    double wsum = 0.0;
    for (double w : q.weights)
        wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(q.nodes.front() >= -1e-10);
    CHECK(q.nodes.back() <= 1.0 + 1e-10);
    // Critical sequence: the spectrum reaches down to zero.
    CHECK(q.nodes.front() <= 1e-3);
    for (std::size_t i = 1; i < q.nodes.size(); ++i)
        CHECK(q.nodes[i] >= q.nodes[i - 1]);
}

TEST_CASE("Gauss exactness of the spectral quadrature") {
    std::mt19937 rng(23);
    const auto angles =
        zzi::AngleSequence::explicit_list(random_angles(rng, 40));
    const auto J = zzi::build_jacobi(angles, 12);
    const auto mu = zzi::moments(J, 10);
    const auto q = zzi::spectral_quadrature(J);
    for (std::size_t p = 0; p <= 10; ++p) {
        double s = 0.0;
        for (std::size_t i = 0; i < q.nodes.size(); ++i)
            s += q.weights[i] * std::pow(q.nodes[i], static_cast<double>(p));
        CHECK(s == doctest::Approx(mu.mu[p]).epsilon(1e-10));
    }
}

TEST_CASE("Hankel log-determinants") {
    // Dirac measure at 1: rank-one moment matrix.
    const std::vector<double> ones{1.0, 1.0, 1.0};
    CHECK(zzi::hankel_logdet(ones, 1).value() ==
          doctest::Approx(1.0).epsilon(1e-15));
    const auto h2 = zzi::hankel_logdet(ones, 2);
    CHECK(std::fabs(h2.value()) <= 1e-15);

    // Uniform measure on [0, 1]: mu_p = 1/(p+1).
    const std::vector<double> unif{1.0, 0.5, 1.0 / 3.0};
    CHECK(zzi::hankel_logdet(unif, 2).value() ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-13));

    // m = 1 returns mu_0.
    CHECK(zzi::hankel_logdet(std::vector<double>{0.8}, 1).value() ==
          doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("Hankel determinant matches cofactor expansion on random PSD sets") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(0.05, 1.0);
    for (std::size_t trial = 0; trial < 20; ++trial) {
        // Three-atom measure => genuinely PSD 3x3 Hankel matrix.
        double x[3], w[3];
        for (int i = 0; i < 3; ++i) {
            x[i] = dist(rng);
            w[i] = dist(rng);
        }
        std::vector<double> mu(5, 0.0);
        for (std::size_t p = 0; p < 5; ++p)
            for (int i = 0; i < 3; ++i)
                mu[p] += w[i] * std::pow(x[i], static_cast<double>(p));
        const double a = mu[0], b = mu[1], c = mu[2], d = mu[3], e = mu[4];
        const double direct = a * (c * e - d * d) - b * (b * e - c * d) +
                              c * (b * d - c * c);
        const auto ld = zzi::hankel_logdet(mu, 3);
        CHECK(ld.value() == doctest::Approx(direct).epsilon(1e-10));
        CHECK(ld.sign >= 0);
    }
}

TEST_CASE("moment-table Hankel minors are PSD") {
    std::mt19937 rng(43);
    const auto angles =
        zzi::AngleSequence::explicit_list(random_angles(rng, 30));
    const auto J = zzi::build_jacobi(angles, 10);
    const auto mu = zzi::moments(J, 8);
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto ld = zzi::hankel_logdet(mu, m);
        CHECK((ld.sign > 0 || ld.value() >= -1e-12));
    }
}

TEST_CASE("sqrt minor basics") {
    zzi::JacobiOperator single;
    single.diag = {0.49};
    CHECK(zzi::sqrt_minor_logdet(single, 1).value() ==
          doctest::Approx(0.7).epsilon(1e-14));

    // Full minor: det(J^{1/2})^2 = det J = prod d_k^2.
    const auto seq = zzi::AngleSequence::homogeneous(0.5);
    const auto J = zzi::build_jacobi(seq, 6);
    const auto D = zzi::build_d_even(seq, 6);
    const auto full = zzi::sqrt_minor_logdet(J, 6);
    double logdetJ = 0.0;
    for (double d : D.diag)
        logdetJ += 2.0 * std::log(d);
    CHECK(2.0 * full.log_abs == doctest::Approx(logdetJ).epsilon(1e-11));
}

TEST_CASE("sqrt minor at pi/4 approaches the m = 1 closed form") {
    const auto J =
        zzi::build_jacobi(zzi::AngleSequence::homogeneous(kPi / 4), 4096);
    const double v = 2.0 * zzi::sqrt_minor_logdet(J, 1).value();
    CHECK(v == doctest::Approx(8.0 / (3.0 * kPi)).epsilon(2e-4));
}

TEST_CASE("polar minor of a diagonal factor is one") {
    zzi::BidiagonalOperator D;
    D.diag = {0.3, 0.8, 0.5, 0.9};
    D.subdiag = {0.0, 0.0, 0.0};
    const auto ld = zzi::polar_minor_logdet(D, 4);
    CHECK(ld.value() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("polar minor decays in the supercritical regime") {
    // The minor decays like (cot^2 theta)^m; at theta = 0.3 pi, m = 6 the
    // bound is (cot 0.3pi)^12 ~ 2.2e-2.
    const auto D =
        zzi::build_d_even(zzi::AngleSequence::homogeneous(0.3 * kPi), 256);
    const auto ld = zzi::polar_minor_logdet(D, 6);
    CHECK(std::exp(ld.log_abs) <=
          1.5 * std::pow(std::tan(0.3 * kPi), -12.0));
}

TEST_CASE("dense log-determinant") {
    // det [[2,1],[1,3]] = 5; det of a singular matrix has sign 0.
    CHECK(zzi::dense_logdet({2, 1, 1, 3}, 2).value() ==
          doctest::Approx(5.0).epsilon(1e-14));
    CHECK(zzi::dense_logdet({1, 2, 2, 4}, 2).sign == 0);
    CHECK(zzi::dense_logdet({-3}, 1).value() ==
          doctest::Approx(-3.0).epsilon(1e-15));
    CHECK(zzi::dense_logdet({}, 0).value() == doctest::Approx(1.0));
}

TEST_CASE("tridiagonal eigensolver against closed-form spectra") {
    // Free Laplacian-type matrix: diag 0, offdiag 1, size n has eigenvalues
    // 2 cos(k pi / (n+1)).
    const std::size_t n = 32;
    std::vector<double> d(n, 0.0), e(n - 1, 1.0), vals;
    zzi::tridiag_eigen(d, e, vals);
    for (std::size_t k = 0; k < n; ++k) {
        const double expect =
            2.0 * std::cos(static_cast<double>(n - k) * kPi /
                           static_cast<double>(n + 1));
        CHECK(vals[k] == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
    std::vector<double> x, w;
    zzi::gauss_legendre(16, x, w);
    double wsum = 0.0;
    for (double wi : w)
        wsum += wi;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (std::size_t p = 0; p <= 31; ++p) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += w[i] * std::pow(x[i], static_cast<double>(p));
        const double exact = p % 2 ? 0.0 : 2.0 / static_cast<double>(p + 1);
        CHECK(s == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("dense symmetric eigenvalues") {
    // [[2,1,0],[1,2,1],[0,1,2]] has eigenvalues 2, 2 +- sqrt(2).
    const auto vals = zzi::symmetric_eigenvalues({2, 1, 0, 1, 2, 1, 0, 1, 2}, 3);
    CHECK(vals[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
    CHECK(vals[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(vals[2] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("operator inequality 0 <= J <= 1 on random sequences") {
    std::mt19937 rng(53);
    for (std::size_t trial = 0; trial < 4; ++trial) {
        const auto angles =
            zzi::AngleSequence::explicit_list(random_angles(rng, 128));
        const auto q =
            zzi::spectral_quadrature(zzi::build_jacobi(angles, 64));
        CHECK(q.nodes.front() >= -1e-10);
        CHECK(q.nodes.back() <= 1.0 + 1e-10);
    }
}

} // TEST_SUITE
