#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "zzi/angles.hpp"
#include "zzi/eigen.hpp"
#include "zzi/errors.hpp"
#include "zzi/exact.hpp"
#include "zzi/layered.hpp"
#include "zzi/oracle.hpp"
#include "zzi/tridiag.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

using zzi::layered::Method;

double mag(const zzi::AngleSequence& seq, std::size_t m, Method method,
           double tol = 1e-8) {
    return zzi::layered::magnetization(seq, m, method, tol).value;
}

} // namespace

TEST_SUITE("layered") {

TEST_CASE("fully critical magnetization matches the factorial closed form") {
    const auto seq = zzi::AngleSequence::homogeneous(kPi / 4);
    CHECK(mag(seq, 0, Method::Sqrt) == 1.0);
    CHECK(mag(seq, 1, Method::Sqrt) ==
          doctest::Approx(8.0 / (3.0 * kPi)).epsilon(1e-6));
    CHECK(mag(seq, 2, Method::Sqrt) ==
          doctest::Approx(36864.0 / (4725.0 * kPi * kPi)).epsilon(1e-6));
}

TEST_CASE("m = 0 is exactly one for every method") {
    const auto seq = zzi::AngleSequence::homogeneous(0.6);
    for (Method method : {Method::Sqrt, Method::Hankel, Method::Polar})
        CHECK(mag(seq, 0, method) == 1.0);
}

TEST_CASE("the three determinant paths agree") {
    const double tol = 1e-7;
    const auto cases = {
        zzi::AngleSequence::homogeneous(kPi / 6),
        zzi::AngleSequence::homogeneous(1.1),
        zzi::AngleSequence::periodic({0.5, 0.9, 1.2, 0.7}),
        zzi::AngleSequence::homogeneous_with_first(0.4, 0.8),
    };
    for (const auto& seq : cases)
        for (std::size_t m : {1u, 2u, 4u}) {
            const double vs = mag(seq, m, Method::Sqrt, tol);
            const double vh = mag(seq, m, Method::Hankel, tol);
            const double vp = mag(seq, m, Method::Polar, tol);
            CHECK(std::fabs(vs - vh) <= 10 * tol);
            CHECK(std::fabs(vs - vp) <= 10 * tol);
        }
}

TEST_CASE("reported values stay inside (0, 1]") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(0.2, 1.35);
    for (std::size_t trial = 0; trial < 8; ++trial) {
        const auto seq = zzi::AngleSequence::homogeneous(dist(rng));
        const auto rep = zzi::layered::magnetization(seq, 3);
        CHECK(rep.value > 0.0);
        CHECK(rep.value <= 1.0);
        CHECK(rep.truncation >= 64);
    }
}

TEST_CASE("hankel path refuses m beyond its conditioning range") {
    const auto seq = zzi::AngleSequence::homogeneous(0.5);
    CHECK_THROWS_AS(zzi::layered::magnetization(seq, 13, Method::Hankel),
                    zzi::domain_error);
}

TEST_CASE("explicit finite lists are evaluated at their exact size") {
    const std::vector<double> thetas(24, 0.6);
    const auto fin = zzi::AngleSequence::explicit_list(thetas);
    const auto rep = zzi::layered::magnetization(fin, 2, Method::Sqrt);
    CHECK(rep.truncation == 12);
    CHECK(rep.est_error == 0.0);
    CHECK_THROWS_AS(zzi::layered::magnetization(fin, 13), zzi::size_error);
}

TEST_CASE("subcritical magnetization matches the finite-strip oracle") {
    const auto seq = zzi::AngleSequence::homogeneous(kPi / 6);
    const auto spec = zzi::oracle::StripSpec::from_angles(seq, 20, 12);
    for (std::size_t m : {1u, 2u}) {
        const double strip =
            zzi::oracle::transfer_matrix_magnetization(spec, 2 * m, 6);
        CHECK(std::fabs(mag(seq, m, Method::Sqrt) - strip) <= 1e-2);
    }
}

TEST_CASE("supercritical kernel vector annihilates the adjoint factor") {
    CHECK(zzi::layered::kernel_residual_homogeneous(0.3 * kPi, 64) <= 1e-12);
    CHECK(zzi::layered::kernel_residual_homogeneous(0.4 * kPi, 32) <= 1e-12);
    CHECK_THROWS_AS(zzi::layered::kernel_residual_homogeneous(kPi / 4, 32),
                    zzi::domain_error);
}

TEST_CASE("supercritical decay rate of consecutive columns") {
    const double theta = 0.3 * kPi;
    const double bound = std::pow(1.0 / std::tan(theta), 2) + 0.05;
    const auto seq = zzi::AngleSequence::homogeneous(theta);
    double prev = mag(seq, 5, Method::Sqrt, 1e-7);
    for (std::size_t m = 6; m <= 8; ++m) {
        const double cur = mag(seq, m, Method::Sqrt, 1e-7);
        CHECK(cur / prev <= bound);
        prev = cur;
    }
}

TEST_CASE("periodic criticality product") {
    const auto c1 = zzi::layered::periodic_criticality({kPi / 4, kPi / 4});
    CHECK(c1.product == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c1.critical);

    const auto c2 = zzi::layered::periodic_criticality({kPi / 6, kPi / 3});
    CHECK(c2.product == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c2.critical);

    const auto c3 = zzi::layered::periodic_criticality({kPi / 6, kPi / 6});
    CHECK(c3.product == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(!c3.critical);

    CHECK_THROWS_AS(zzi::layered::periodic_criticality({0.5, 0.6, 0.7}),
                    zzi::size_error);
}

TEST_CASE("criticality shows up as spectrum reaching zero") {
    const auto crit =
        zzi::build_jacobi(zzi::AngleSequence::periodic({kPi / 6, kPi / 3}), 512);
    std::vector<double> vals;
    zzi::tridiag_eigen(crit.diag, crit.offdiag, vals);
    CHECK(vals.front() <= 1e-4);

    const auto gapped =
        zzi::build_jacobi(zzi::AngleSequence::periodic({kPi / 6, kPi / 6}), 512);
    zzi::tridiag_eigen(gapped.diag, gapped.offdiag, vals);
    CHECK(vals.front() >= 1e-3);
}

TEST_CASE("periodic ground vector") {
    const auto g1 = zzi::layered::ground_vector({kPi / 4, kPi / 4});
    CHECK(g1[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(g1[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    const auto g2 = zzi::layered::ground_vector({kPi / 6, kPi / 3});
    CHECK(g2[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(g2[1] == doctest::Approx(2.0).epsilon(1e-14));

    CHECK_THROWS_AS(zzi::layered::ground_vector({kPi / 6, kPi / 6}),
                    zzi::precondition_error);
}

TEST_CASE("ground vector annihilates interior rows of the periodic operator") {
    // Critical period-4 block: fix three angles, solve the fourth.
    std::vector<double> block{0.5, 0.9, 1.1, 0.0};
    block[3] = std::atan(1.0 / (std::tan(block[0]) * std::tan(block[1]) *
                                std::tan(block[2])));
    REQUIRE(zzi::layered::periodic_criticality(block).critical);

    const auto psi = zzi::layered::ground_vector(block);
    std::vector<double> b, a;
    zzi::layered::periodic_entries(block, b, a);
    const std::size_t n = b.size();
    // Rows 2..n-1 of J psi = 0 with the periodic extension psi_{n+1} = psi_1.
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double r =
            a[k - 1] * psi[k - 1] + b[k] * psi[k] + a[k] * psi[k + 1];
        CHECK(std::fabs(r) <= 1e-12);
    }
}

TEST_CASE("C_J closed-form values and invariances") {
    CHECK(zzi::layered::cj_constant({kPi / 4, kPi / 4}) ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(zzi::layered::cj_constant({kPi / 6, kPi / 3}) ==
          doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-13));

    // Normalization of the kernel vector cancels.
    const std::vector<double> block{kPi / 6, kPi / 3};
    auto psi = zzi::layered::ground_vector(block);
    const double base = zzi::layered::cj_from_kernel(block, psi);
    for (double& p : psi)
        p *= 7.0;
    CHECK(zzi::layered::cj_from_kernel(block, psi) ==
          doctest::Approx(base).epsilon(1e-14));
}

TEST_CASE("C_J is invariant under cyclic rotation of the block") {
    std::vector<double> block{0.5, 0.9, 1.1, 0.0};
    block[3] = std::atan(1.0 / (std::tan(block[0]) * std::tan(block[1]) *
                                std::tan(block[2])));
    const double base = zzi::layered::cj_constant(block);
    std::vector<double> rot = {block[2], block[3], block[0], block[1]};
    CHECK(zzi::layered::cj_constant(rot) ==
          doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("empirical integrated density of states") {
    std::vector<double> grid;
    for (int j = 1; j <= 200; ++j)
        grid.push_back(0.05 * j / 200.0);
    const auto rep =
        zzi::layered::ids_empirical({kPi / 4, kPi / 4}, 128, grid);
    CHECK(rep.slope == doctest::Approx(2.0).epsilon(0.05));

    // The whole spectrum lies below 1.
    std::vector<double> wide = grid;
    wide.push_back(1.0 + 1e-9);
    const auto full =
        zzi::layered::ids_empirical({kPi / 4, kPi / 4}, 64, wide);
    CHECK(full.ids.back() >= 1.0 - 1.0 / 128.0);

    CHECK_THROWS_AS(zzi::layered::ids_empirical({kPi / 4, kPi / 4}, 8, grid),
                    zzi::size_error);
}

TEST_CASE("twisted block lowest eigenvalue") {
    const std::vector<double> block{kPi / 4, kPi / 4};
    CHECK(zzi::layered::twisted_lowest_eigenvalue(block, 0.0) <= 1e-12);
    const double t = 0.01;
    const double lp = zzi::layered::twisted_lowest_eigenvalue(block, t);
    const double lm = zzi::layered::twisted_lowest_eigenvalue(block, -t);
    CHECK(lp == doctest::Approx(lm).epsilon(1e-12));
    CHECK(lp / (t * t) == doctest::Approx(0.25).epsilon(1e-3));
    CHECK_THROWS_AS(zzi::layered::twisted_lowest_eigenvalue(block, 4.0),
                    zzi::domain_error);
}

} // TEST_SUITE
