#include <benchmark/benchmark.h>

#include <vector>

#include "machin/approx.hpp"
#include "machin/cf_engine.hpp"
#include "machin/identity.hpp"

using machin::BigInt;
using machin::Rational;
using machin::Seed;

namespace {

Seed euler_seed() {
    return {BigInt(1), BigInt(1), Rational(1, 2), Rational(1, 3)};
}

void BM_refine_stream(benchmark::State& state) {
    Seed seed = euler_seed();
    long depth = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(machin::refine_stream(seed, depth));
    }
}
BENCHMARK(BM_refine_stream)->Arg(4)->Arg(8)->Arg(12);

// Large partial quotient: arctan(9/10)/arctan(1/1000) ~ 733, the case
// the doubling search exists for.
void BM_step_linear_large_q(benchmark::State& state) {
    Rational u(9, 10), v(1, 1000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            machin::step(u, v, machin::StepStrategy::Linear));
    }
}
BENCHMARK(BM_step_linear_large_q);

void BM_step_doubling_large_q(benchmark::State& state) {
    Rational u(9, 10), v(1, 1000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            machin::step(u, v, machin::StepStrategy::Doubling));
    }
}
BENCHMARK(BM_step_doubling_large_q);

void BM_arctan_interval(benchmark::State& state) {
    Rational x(1, 7);
    Rational eps = machin::pow10(-state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(machin::arctan_interval(x, eps));
    }
}
BENCHMARK(BM_arctan_interval)->Arg(50)->Arg(100)->Arg(200);

void BM_verify_kanada(benchmark::State& state) {
    machin::MachinIdentity id = machin::MachinIdentity::parse(
        "44*atan(1/57) + 7*atan(1/239) - 12*atan(1/682) + 24*atan(1/12943) = pi/4");
    for (auto _ : state) {
        benchmark::DoNotOptimize(machin::verify(id));
    }
}
BENCHMARK(BM_verify_kanada);

void BM_verify_refined(benchmark::State& state) {
    std::vector<machin::RefinementRecord> recs =
        machin::refine_stream(euler_seed(), state.range(0) + 1);
    const machin::RefinementRecord& rec = recs.back();
    machin::MachinIdentity id({{rec.a_n, rec.u_n}, {rec.a_prev, rec.u_next}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(machin::verify(id));
    }
}
BENCHMARK(BM_verify_refined)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_pi_digits(benchmark::State& state) {
    Seed seed = euler_seed();
    long digits = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(machin::pi_digits(seed, 2, digits));
    }
}
BENCHMARK(BM_pi_digits)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
