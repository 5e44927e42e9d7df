#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "zzi/angles.hpp"
#include "zzi/errors.hpp"
#include "zzi/oracle.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

namespace o = zzi::oracle;

std::vector<double> random_angles(std::mt19937& rng, std::size_t count) {
    std::uniform_real_distribution<double> dist(0.2, 1.35);
    std::vector<double> v(count);
    for (double& t : v)
        t = dist(rng);
    return v;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("couplings follow the angle parametrization") {
    const auto seq = zzi::AngleSequence::homogeneous(kPi / 6);
    const auto spec = o::StripSpec::from_angles(seq, 4, 3);
    REQUIRE(spec.couplings.size() == 4);
    for (double k : spec.couplings)
        CHECK(k == doctest::Approx(-0.5 * std::log(std::tan(kPi / 12)))
                       .epsilon(1e-15));
}

TEST_CASE("single free spin reduces to the hyperbolic closed form") {
    // Width 2, height 1: the free spin sees two bonds of each coupling.
    o::StripSpec spec;
    spec.width = 2;
    spec.height = 1;
    spec.couplings = {0.35, 0.6};
    const double expect = std::tanh(2 * 0.35 + 2 * 0.6);
    CHECK(o::enumerate_magnetization(spec, 1, 0) ==
          doctest::Approx(expect).epsilon(1e-14));
    CHECK(o::transfer_matrix_magnetization(spec, 1, 0) ==
          doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("transfer matrix reproduces exhaustive enumeration") {
    std::mt19937 rng(3);
    for (std::size_t trial = 0; trial < 6; ++trial) {
        const auto angles =
            zzi::AngleSequence::explicit_list(random_angles(rng, 4));
        const auto spec = o::StripSpec::from_angles(angles, 4, 3);
        for (std::size_t col = 1; col <= 3; ++col)
            for (std::size_t row = 0; row < 3; ++row) {
                const double a = o::enumerate_magnetization(spec, col, row);
                const double b =
                    o::transfer_matrix_magnetization(spec, col, row);
                CHECK(std::fabs(a - b) <= 1e-12);
            }
    }
}

TEST_CASE("strong couplings freeze the lattice") {
    const auto seq = zzi::AngleSequence::homogeneous(0.01);
    const auto spec = o::StripSpec::from_angles(seq, 4, 3);
    CHECK(o::transfer_matrix_magnetization(spec, 2, 1) > 0.999);
}

TEST_CASE("flipping the boundary negates the expectation") {
    std::mt19937 rng(9);
    const auto angles =
        zzi::AngleSequence::explicit_list(random_angles(rng, 6));
    auto spec = o::StripSpec::from_angles(angles, 6, 4);
    const double plus = o::transfer_matrix_magnetization(spec, 3, 2);
    spec.boundary_spin = -1;
    const double minus = o::transfer_matrix_magnetization(spec, 3, 2);
    CHECK(plus == doctest::Approx(-minus).epsilon(1e-14));
}

TEST_CASE("width saturation in the subcritical regime") {
    const auto seq = zzi::AngleSequence::homogeneous(kPi / 6);
    const auto narrow = o::StripSpec::from_angles(seq, 16, 10);
    const auto wide = o::StripSpec::from_angles(seq, 20, 10);
    const double a = o::transfer_matrix_magnetization(narrow, 2, 5);
    const double b = o::transfer_matrix_magnetization(wide, 2, 5);
    CHECK(std::fabs(a - b) < 1e-6);
}

TEST_CASE("size guards") {
    const auto seq = zzi::AngleSequence::homogeneous(0.6);
    const auto tall = o::StripSpec::from_angles(seq, 4, 15);
    CHECK_THROWS_AS(o::transfer_matrix_magnetization(tall, 2, 7),
                    zzi::size_error);
    const auto big = o::StripSpec::from_angles(seq, 8, 6);
    CHECK_THROWS_AS(o::enumerate_magnetization(big, 2, 3), zzi::size_error);
    const auto small = o::StripSpec::from_angles(seq, 4, 3);
    CHECK_THROWS_AS(o::transfer_matrix_magnetization(small, 0, 1),
                    zzi::size_error);
    CHECK_THROWS_AS(o::transfer_matrix_magnetization(small, 4, 1),
                    zzi::size_error);
    CHECK_THROWS_AS(o::transfer_matrix_magnetization(small, 2, 3),
                    zzi::size_error);
}

} // TEST_SUITE
