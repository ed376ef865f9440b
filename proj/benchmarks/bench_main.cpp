#include <benchmark/benchmark.h>

#include <random>

#include "thetaq/cyclo.hpp"
#include "thetaq/heisenberg.hpp"
#include "thetaq/qgroup.hpp"
#include "thetaq/skein.hpp"
#include "thetaq/tangle.hpp"
#include "thetaq/theta_numeric.hpp"

using namespace thetaq;

namespace {

CycloScalar dense_scalar(int N, uint64_t salt) {
    std::vector<Rational> coeffs(2 * N);
    std::mt19937_64 rng(salt);
    for (auto& c : coeffs) {
        c = Rational(static_cast<long>(rng() % 17) - 8,
                     1 + static_cast<long>(rng() % 5));
    }
    return CycloScalar(N, std::move(coeffs), 0);
}

void BM_ScalarMultiply(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const CycloScalar a = dense_scalar(N, 1);
    const CycloScalar b = dense_scalar(N, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_ScalarMultiply)->Arg(2)->Arg(8)->Arg(16);

void BM_ScalarInverse(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const CycloScalar a = dense_scalar(N, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inverse());
    }
}
BENCHMARK(BM_ScalarInverse)->Arg(2)->Arg(8);

void BM_InducedSpace(benchmark::State& state) {
    const long N = state.range(0);
    const Lagrangian l = Lagrangian::standard(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(induced_space(l, N));
    }
}
BENCHMARK(BM_InducedSpace)->Arg(2)->Arg(4)->Arg(8);

void BM_FourierMatrix(benchmark::State& state) {
    const long N = state.range(0);
    IntMat s(2, 2);
    s.at(0, 1) = -1;
    s.at(1, 0) = 1;
    const Lagrangian l = Lagrangian::standard(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fourier_matrix(s, l, N));
    }
}
BENCHMARK(BM_FourierMatrix)->Arg(2)->Arg(4);

void BM_QuasiTriangularCheck(benchmark::State& state) {
    const long N = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_quasitriangular(N));
    }
}
BENCHMARK(BM_QuasiTriangularCheck)->Arg(2)->Arg(4);

void BM_EvaluateRandomDiagram(benchmark::State& state) {
    std::mt19937_64 rng(1234);
    const SliceDiagram d = random_diagram(4, rng, 60);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(d));
    }
}
BENCHMARK(BM_EvaluateRandomDiagram);

void BM_ThetaGramQuadrature(benchmark::State& state) {
    const PeriodMatrix pi(1, {Complex(0.0, 1.0)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram_quadrature(2, 1, pi, 6, 24));
    }
}
BENCHMARK(BM_ThetaGramQuadrature);

}  // namespace

BENCHMARK_MAIN();
