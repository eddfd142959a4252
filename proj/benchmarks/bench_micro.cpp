#include <benchmark/benchmark.h>

#include <sstream>

#include "tabmark/attacks.hpp"
#include "tabmark/bench.hpp"
#include "tabmark/csv.hpp"
#include "tabmark/embed.hpp"
#include "tabmark/extract.hpp"

namespace {

using namespace tabmark;

const DatasetSpec spec;
const MarkConfig mark = default_mark_config(spec);
const SecretKeys keys{5, 10};

WatermarkBits wm16() {
    WatermarkBits wm;
    wm.width = 4;
    wm.height = 4;
    wm.bits = {1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 1, 0, 1};
    return wm;
}

void BM_gen_dataset(benchmark::State& state) {
    const auto n = static_cast<size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gen_dataset(n, spec, 7));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_gen_dataset)->Arg(5000);

void BM_embed(benchmark::State& state) {
    const auto base = gen_dataset(static_cast<size_t>(state.range(0)), spec, 7);
    const auto wm = wm16();
    for (auto _ : state) benchmark::DoNotOptimize(embed(base, keys, wm, mark));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_embed)->Arg(5000);

void BM_recover(benchmark::State& state) {
    const auto base = gen_dataset(static_cast<size_t>(state.range(0)), spec, 7);
    const auto wm = wm16();
    const auto marked = embed(base, keys, wm, mark).first;
    for (auto _ : state) benchmark::DoNotOptimize(recover(marked, keys, wm, mark));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_recover)->Arg(5000);

void BM_attack_delete(benchmark::State& state) {
    const auto base = gen_dataset(static_cast<size_t>(state.range(0)), spec, 7);
    const auto marked = embed(base, keys, wm16(), mark).first;
    uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(attack_delete(marked, 0.5, seed++));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_attack_delete)->Arg(5000);

void BM_csv_roundtrip(benchmark::State& state) {
    const auto base = gen_dataset(static_cast<size_t>(state.range(0)), spec, 7);
    for (auto _ : state) {
        std::ostringstream out;
        render_csv(out, base);
        std::istringstream in(out.str());
        benchmark::DoNotOptimize(parse_relation(in, mark));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_csv_roundtrip)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
