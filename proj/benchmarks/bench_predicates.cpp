#include <benchmark/benchmark.h>

#include "udgsep/geom.hpp"
#include "udgsep/instance.hpp"

using namespace udgsep;

namespace {

std::vector<Point> bench_points(int n, std::uint64_t seed) {
    return generate_instance(GenKind::Uniform, n, {}, seed).points;
}

void BM_Orient(benchmark::State& state) {
    auto pts = bench_points(64, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        const Point& a = pts[i % pts.size()];
        const Point& b = pts[(i + 7) % pts.size()];
        const Point& c = pts[(i + 23) % pts.size()];
        benchmark::DoNotOptimize(orient(a, b, c));
        ++i;
    }
}
BENCHMARK(BM_Orient);

void BM_Incircle(benchmark::State& state) {
    auto pts = bench_points(64, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        const Point& a = pts[i % pts.size()];
        const Point& b = pts[(i + 5) % pts.size()];
        const Point& c = pts[(i + 17) % pts.size()];
        const Point& d = pts[(i + 31) % pts.size()];
        if (orient(a, b, c) != 0) benchmark::DoNotOptimize(incircle(a, b, c, d));
        ++i;
    }
}
BENCHMARK(BM_Incircle);

void BM_SegmentsCross(benchmark::State& state) {
    auto pts = bench_points(64, 3);
    std::size_t i = 0;
    for (auto _ : state) {
        Segment s1(pts[i % pts.size()], pts[(i + 9) % pts.size()]);
        Segment s2(pts[(i + 3) % pts.size()], pts[(i + 40) % pts.size()]);
        benchmark::DoNotOptimize(segments_cross(s1, s2));
        ++i;
    }
}
BENCHMARK(BM_SegmentsCross);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
