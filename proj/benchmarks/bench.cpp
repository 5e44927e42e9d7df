#include <benchmark/benchmark.h>

#include <vector>

#include "zzi/angles.hpp"
#include "zzi/eigen.hpp"
#include "zzi/layered.hpp"
#include "zzi/logdet.hpp"
#include "zzi/oracle.hpp"
#include "zzi/tridiag.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

void BM_TridiagEigen(benchmark::State& state) {
    const std::size_t N = static_cast<std::size_t>(state.range(0));
    const auto J =
        zzi::build_jacobi(zzi::AngleSequence::homogeneous(0.6), N);
    for (auto _ : state) {
        std::vector<double> vals;
        zzi::tridiag_eigen(J.diag, J.offdiag, vals);
        benchmark::DoNotOptimize(vals);
    }
}
BENCHMARK(BM_TridiagEigen)->Arg(256)->Arg(1024);

void BM_MagnetizationFixedN(benchmark::State& state) {
    const auto seq = zzi::AngleSequence::homogeneous(kPi / 6);
    for (auto _ : state) {
        const auto rep = zzi::layered::magnetization(
            seq, 4, zzi::layered::Method::Sqrt, 1e-8, 512);
        benchmark::DoNotOptimize(rep.value);
    }
}
BENCHMARK(BM_MagnetizationFixedN);

void BM_HankelLogdet(benchmark::State& state) {
    const auto J =
        zzi::build_jacobi(zzi::AngleSequence::homogeneous(0.5), 32);
    const auto mu = zzi::moments(J, 22);
    for (auto _ : state) {
        const auto ld = zzi::hankel_logdet(mu, 12);
        benchmark::DoNotOptimize(ld.log_abs);
    }
}
BENCHMARK(BM_HankelLogdet);

void BM_OracleSweep(benchmark::State& state) {
    const auto spec = zzi::oracle::StripSpec::from_angles(
        zzi::AngleSequence::homogeneous(kPi / 6), 20,
        static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        const double v = zzi::oracle::transfer_matrix_magnetization(
            spec, 2, static_cast<std::size_t>(state.range(0)) / 2);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_OracleSweep)->Arg(10)->Arg(12);

} // namespace

BENCHMARK_MAIN();
