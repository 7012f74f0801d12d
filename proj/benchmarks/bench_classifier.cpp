#include <benchmark/benchmark.h>

#include <vector>

#include "coadjoint/coadjoint.hpp"

namespace {

using namespace coadjoint;

std::vector<CoadjointPoint> points_for(const OrbitClass& cls, const ComponentLabel& labels) {
    SamplerConfig cfg;
    cfg.seed = 42;
    return sample_orbit(cls, labels, cfg, 1024);
}

const std::vector<CoadjointPoint>& spinning() {
    static const auto pts = points_for(OrbitClass::massive_spinning(2.0, 1.0), {1, std::nullopt, 1});
    return pts;
}

const std::vector<CoadjointPoint>& helicity() {
    static const auto pts = points_for(OrbitClass::massless_helicity(1.0), {1, 1, std::nullopt});
    return pts;
}

void BM_ClassifyMassive(benchmark::State& state) {
    const auto& pts = spinning();
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(classify(pts[i++ % pts.size()]));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ClassifyMassive);

void BM_ClassifyMassless(benchmark::State& state) {
    const auto& pts = helicity();
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(classify(pts[i++ % pts.size()]));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ClassifyMassless);

void BM_NormalFormMassive(benchmark::State& state) {
    const auto& pts = spinning();
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(pts[i++ % pts.size()]));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NormalFormMassive);

void BM_CoadjointAct(benchmark::State& state) {
    SamplerConfig cfg;
    cfg.seed = 7;
    cfg.include_involutions = true;
    const auto g = random_group_element(cfg);
    const auto& pts = spinning();
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(coadjoint_act(g, pts[i++ % pts.size()]));
}
BENCHMARK(BM_CoadjointAct);

void BM_RandomGroupElement(benchmark::State& state) {
    SamplerConfig cfg;
    cfg.seed = 11;
    cfg.include_involutions = true;
    Sampler sampler(cfg);
    for (auto _ : state) benchmark::DoNotOptimize(sampler.group_element());
}
BENCHMARK(BM_RandomGroupElement);

}  // namespace
BENCHMARK_MAIN();
