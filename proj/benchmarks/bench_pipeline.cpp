#include <benchmark/benchmark.h>

#include "udgsep/delaunay.hpp"
#include "udgsep/instance.hpp"
#include "udgsep/separator.hpp"

using namespace udgsep;

namespace {

void BM_Delaunay(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    GenParams params;
    params.avg_degree = 8;
    auto pts = generate_instance(GenKind::Uniform, n, params, 11).points;
    for (auto _ : state) benchmark::DoNotOptimize(build_delaunay(pts));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Delaunay)->RangeMultiplier(2)->Range(50, 800)->Complexity();

void BM_Separator(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    GenParams params;
    params.avg_degree = 8;
    auto pts = generate_instance(GenKind::Uniform, n, params, 11).points;
    for (auto _ : state) benchmark::DoNotOptimize(compute_separator(pts));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Separator)->RangeMultiplier(2)->Range(50, 800)->Complexity();

void BM_SeparatorDense(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    GenParams params;
    params.avg_degree = 30;
    auto pts = generate_instance(GenKind::Uniform, n, params, 12).points;
    for (auto _ : state) benchmark::DoNotOptimize(compute_separator(pts));
    state.SetComplexityN(n);
}
BENCHMARK(BM_SeparatorDense)->RangeMultiplier(2)->Range(50, 400)->Complexity();

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
