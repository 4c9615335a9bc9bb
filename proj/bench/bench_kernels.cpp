#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "gomega/graph.hpp"
#include "gomega/kernels.hpp"
#include "gomega/linear_operator.hpp"
#include "gomega/omega.hpp"
#include "gomega/schreier.hpp"
#include "gomega/tree.hpp"

namespace {

using gomega::kernels::Policy;

Policy policy_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Policy::serial : Policy::parallel;
}

void BM_GeneratorImages(benchmark::State& state) {
  const auto depth = static_cast<unsigned>(state.range(0));
  const auto w = gomega::OmegaWord::parse(":012");
  for (auto _ : state) {
    auto p = gomega::generator_level_permutation(gomega::Generator::b, w, depth,
                                                 policy_of(state));
    benchmark::DoNotOptimize(p.data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << depth));
}

void BM_Compose(benchmark::State& state) {
  const std::size_t n = std::size_t{1} << state.range(0);
  std::vector<std::uint32_t> a(n), b(n), out(n);
  std::iota(a.begin(), a.end(), 0u);
  std::iota(b.begin(), b.end(), 0u);
  std::mt19937 rng(7);
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  for (auto _ : state) {
    gomega::kernels::compose(policy_of(state), a, b, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_CsrApply(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  const auto g = gomega::schreier_graph(gomega::OmegaWord::parse(":012"), level);
  const auto m = gomega::markov_operator(*g.graph);
  std::vector<gomega::Weight> x(m.dim(), 1.0), y(m.dim());
  for (auto _ : state) {
    m.apply(x, y, policy_of(state));
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.nonzeros()));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int d : {12, 16, 20})
    for (int p : {0, 1}) b->Args({d, p});
}

}  // namespace

BENCHMARK(BM_GeneratorImages)->Apply(sizes)->ArgNames({"depth", "parallel"});
BENCHMARK(BM_Compose)->Apply(sizes)->ArgNames({"log2n", "parallel"});
BENCHMARK(BM_CsrApply)->Apply(sizes)->ArgNames({"level", "parallel"});

BENCHMARK_MAIN();
