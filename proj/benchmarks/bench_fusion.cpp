#include <benchmark/benchmark.h>

#include "fusion/catalog.hpp"
#include "fusion/near_integral.hpp"
#include "fusion/premodular.hpp"
#include "fusion/spectral.hpp"
#include "fusion/structure.hpp"

using namespace fusion;

namespace {

FusionRing tableRing(const std::string& name) {
    return characterTableToFusionRing(loadEntry(name).as<CharacterTable>());
}

// A4 x A4 has rank 16; large enough that the cubic axiom loop dominates.
const FusionRing& bigRing() {
    static const FusionRing r = productRing(tableRing("A4"), tableRing("A4"));
    return r;
}

void BM_CheckAxioms(benchmark::State& state) {
    const auto& r = bigRing();
    for (auto _ : state) {
        std::size_t total = 0;
        benchmark::DoNotOptimize(checkAxioms(r.rank(), r.flat(), r.duals(), 16, &total));
    }
}
BENCHMARK(BM_CheckAxioms);

void BM_Fpdims(benchmark::State& state) {
    const auto& r = bigRing();
    for (auto _ : state) benchmark::DoNotOptimize(fpdims(r));
}
BENCHMARK(BM_Fpdims);

void BM_Characters(benchmark::State& state) {
    const auto r = tableRing("PSU(3,2)");
    for (auto _ : state) benchmark::DoNotOptimize(characters(r));
}
BENCHMARK(BM_Characters);

void BM_DetectNearIntegral(benchmark::State& state) {
    const auto r = constructNearIntegral(tableRing("A4"), static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(detectNearIntegral(r));
}
BENCHMARK(BM_DetectNearIntegral)->Arg(0)->Arg(5);

void BM_VerlindeA4(benchmark::State& state) {
    const auto m = loadEntry("Z(Rep(A4))").as<ModularDatum>();
    for (auto _ : state) benchmark::DoNotOptimize(verlindeFusion(m));
}
BENCHMARK(BM_VerlindeA4);

void BM_FormClasses(benchmark::State& state) {
    const std::vector<std::uint64_t> g(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(formClasses(g));
}
BENCHMARK(BM_FormClasses)->Arg(1)->Arg(2);

void BM_EnumerateSubrings(benchmark::State& state) {
    const auto r = groupRing(std::vector<std::size_t>{2, 2, 2, 2});
    for (auto _ : state) benchmark::DoNotOptimize(enumerateSubrings(r));
}
BENCHMARK(BM_EnumerateSubrings);

}  // namespace

BENCHMARK_MAIN();
