#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "heapcrys/crystal.hpp"
#include "heapcrys/grassmannian.hpp"
#include "heapcrys/linalg.hpp"
#include "heapcrys/preproj.hpp"
#include "heapcrys/weyl.hpp"

using namespace heapcrys;

namespace {

Word coset_word(const WeylGroup& weyl, const Weight& lambda) {
    return weyl.longest_coset_rep(WeylGroup::stabiliser(lambda));
}

void BM_ReducedWords(benchmark::State& state) {
    const WeylGroup weyl(DynkinDiagram::from_spec("D5"));
    for (auto _ : state) benchmark::DoNotOptimize(weyl.dominant_minuscule_elements(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ReducedWords)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateRpps(benchmark::State& state) {
    const WeylGroup weyl(DynkinDiagram::from_spec("E6"));
    const Heap heap = Heap::build(weyl, coset_word(weyl, Weight({1, 0, 0, 0, 0, 0})));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_rpps(heap, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateRpps)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Gravsort(benchmark::State& state) {
    const WeylGroup weyl(DynkinDiagram::from_spec("D5"));
    const Word word = coset_word(weyl, Weight({0, 0, 0, 0, 1}));
    const IdealCrystal atom = IdealCrystal::of_word(weyl, word);
    for (auto _ : state) benchmark::DoNotOptimize(verify_gravsort(atom, word, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Gravsort)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_RowReduce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> coefficient(-9, 9);
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
    for (auto& row : rows)
        for (auto& x : row) x = coefficient(rng);
    const Matrix m = Matrix::from_ints(rows);
    for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m));
}
BENCHMARK(BM_RowReduce)->Arg(8)->Arg(16)->Arg(32);

void BM_SampleSubmodule(benchmark::State& state) {
    const WeylGroup weyl(DynkinDiagram::from_spec("D4"));
    const Word word = coset_word(weyl, Weight({1, 0, 0, 0}));
    const int n = static_cast<int>(state.range(0));
    auto ambient = std::make_shared<const Ambient>(HeapModule::build(weyl, word), n);
    const ZPhiSampler sampler(ambient);
    const auto rpps = enumerate_rpps(ambient->heap(), n);
    std::mt19937_64 rng(11);
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(rpps[k++ % rpps.size()], rng));
}
BENCHMARK(BM_SampleSubmodule)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
