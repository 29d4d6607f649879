#include <benchmark/benchmark.h>

#include "hallfock/fock.hpp"
#include "hallfock/scalar.hpp"

using namespace hallfock;

static void ScalarNormalize(benchmark::State& state) {
    Scalar q1 = Scalar::q1(), q2 = Scalar::q2();
    Scalar a = (Scalar(1) - q1.pow(4)) * (Scalar(1) - q2.pow(3));
    Scalar b = (Scalar(1) - q1) * (Scalar(1) - q2);
    for (auto _ : state) {
        Scalar r = a / b;
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(ScalarNormalize);

static void ScalarFieldOps(benchmark::State& state) {
    Scalar x = Scalar::parse("(1 - q1^3)/(1 - q2^2)");
    Scalar y = Scalar::parse("(1 + q1*q2)/(1 - q1)");
    for (auto _ : state) {
        Scalar r = x * y + x / y - y;
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(ScalarFieldOps);

static void PsiH1(benchmark::State& state) {
    DegreeCapGuard guard(12);
    SymFunc f = SymFunc::p(Partition({3, 2, 1}));
    for (auto _ : state) {
        SymFunc r = fock::apply_psi_H(1, 2, f);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(PsiH1);

static void PsiH2(benchmark::State& state) {
    DegreeCapGuard guard(12);
    SymFunc f = SymFunc::p(Partition({2, 1}));
    for (auto _ : state) {
        SymFunc r = fock::apply_psi_H(-2, 1, f);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(PsiH2);

BENCHMARK_MAIN();
