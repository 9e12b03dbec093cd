#include <benchmark/benchmark.h>

#include <memory>

#include "fakequad/catalog.hpp"
#include "fakequad/chartab.hpp"
#include "fakequad/fundgroup.hpp"

using namespace fakequad;

namespace {

const char* const kGroups[] = {"A5", "SL(2,5)", "S5", "S4xZ2", "G(32)"};

UnmixedPair main_pair() {
  const auto a5 = std::make_shared<const Group>(construct_group("A5"));
  const MainTheoremInputs in;
  auto vec = [&](const std::string& text, const std::vector<std::size_t>& orders) {
    std::vector<Elem> e;
    for (const auto& p : parse_perm_list(text, 5)) e.push_back(a5->index_of(p));
    return *verify_generating_vector(a5, e, orders).vector;
  };
  return make_pair(vec(in.gv1, in.sig1), vec(in.gv2, in.sig2));
}

}  // namespace

static void BM_CharacterTable(benchmark::State& state) {
  const auto g = std::make_shared<const Group>(construct_group(kGroups[state.range(0)]));
  state.SetLabel(g->label());
  for (auto _ : state) {
    auto ct = character_table(g);
    benchmark::DoNotOptimize(ct);
  }
}

static void BM_ConjugacyClasses(benchmark::State& state) {
  const Group g = construct_group(kGroups[state.range(0)]);
  state.SetLabel(g.label());
  for (auto _ : state) {
    auto cls = conjugacy_classes(g);
    benchmark::DoNotOptimize(cls);
  }
}

static void BM_H1MainPair(benchmark::State& state) {
  const UnmixedPair pair = main_pair();
  for (auto _ : state) {
    auto h = h1_surface(pair);
    benchmark::DoNotOptimize(h);
  }
}

static void BM_FreePairSearch(benchmark::State& state) {
  const auto g = std::make_shared<const Group>(construct_group("A5"));
  const Signature s1({2, 5, 5}), s2({3, 3, 3, 3});
  for (auto _ : state) {
    auto p = find_free_pair(g, s1, s2);
    benchmark::DoNotOptimize(p);
  }
}

static void BM_ReproduceRow(benchmark::State& state) {
  const int row = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = reproduce_row(row);
    benchmark::DoNotOptimize(r);
  }
}

BENCHMARK(BM_CharacterTable)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugacyClasses)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_H1MainPair)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FreePairSearch)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReproduceRow)->Arg(1)->Arg(4)->Arg(5)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
