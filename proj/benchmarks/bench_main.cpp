#include <benchmark/benchmark.h>

#include "floercx/complex.hpp"
#include "floercx/pushoff.hpp"

#include <fstream>
#include <sstream>

using namespace floercx;

namespace {

CurveFile load(const std::string& name) {
    std::ifstream in(std::string(FLOERCX_FIXTURE_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_curve_file(ss.str());
}

void BM_SelfIntersections(benchmark::State& state) {
    CurveFile f = load("fig8.curve");
    for (auto _ : state) benchmark::DoNotOptimize(self_intersections(f.curve));
}
BENCHMARK(BM_SelfIntersections);

void BM_Arrangement(benchmark::State& state) {
    CurveFile f = load("fig8.curve");
    MorseFunction h = MorseFunction::height();
    Rat delta = transversality_window(f.curve, h);
    Curve push = construct_pushoff(f.curve, h, PushoffConfig{delta / 2});
    for (auto _ : state) benchmark::DoNotOptimize(build_arrangement(f.curve, push));
}
BENCHMARK(BM_Arrangement);

void BM_PearlyComplex(benchmark::State& state) {
    CurveFile f = load("fig8.curve");
    MorseFunction h = MorseFunction::height();
    for (auto _ : state) benchmark::DoNotOptimize(build_pearly(f.curve, h));
}
BENCHMARK(BM_PearlyComplex);

void BM_HamiltonianComplex(benchmark::State& state) {
    CurveFile f = load("fig8.curve");
    MorseFunction h = MorseFunction::height();
    Rat delta = transversality_window(f.curve, h);
    Curve push = construct_pushoff(f.curve, h, PushoffConfig{delta / 2});
    for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(f.curve, push));
}
BENCHMARK(BM_HamiltonianComplex);

void BM_TransversalityWindow(benchmark::State& state) {
    CurveFile f = load("fig8.curve");
    MorseFunction h = MorseFunction::height();
    for (auto _ : state) benchmark::DoNotOptimize(transversality_window(f.curve, h));
}
BENCHMARK(BM_TransversalityWindow);

}  // namespace

BENCHMARK_MAIN();
