#include <benchmark/benchmark.h>

#include "tcnet/containment.hpp"
#include "tcnet/cuttable.hpp"
#include "tcnet/genesis.hpp"
#include "tcnet/orient.hpp"
#include "tcnet/satgadget.hpp"

namespace {

using namespace tcnet;

UndirectedNet network(int leaves, int r, int q, std::uint64_t seed = 11) {
  return random_q_cuttable(GenConfig{seed, leaves, r, q, 0});
}

void BM_RecognizeChains(benchmark::State& state) {
  auto net = network(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_q_cuttable(net, 3).is_cuttable);
  state.counters["vertices"] = static_cast<double>(net.vertex_count());
}
BENCHMARK(BM_RecognizeChains)->RangeMultiplier(4)->Range(16, 1024);

void BM_RecognizeChainDeletion(benchmark::State& state) {
  auto net = network(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_q_cuttable_via_chain_deletion(net, 3));
}
BENCHMARK(BM_RecognizeChainDeletion)->RangeMultiplier(4)->Range(16, 1024);

void BM_OrientTwoCuttable(benchmark::State& state) {
  auto net = network(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tree_child_orient_2cuttable(net));
}
BENCHMARK(BM_OrientTwoCuttable)->RangeMultiplier(4)->Range(16, 1024);

void BM_TreeContainment(benchmark::State& state) {
  int leaves = static_cast<int>(state.range(0));
  auto net = network(leaves, leaves / 4, 3);
  auto tree = sample_displayed_tree(net, 5);
  for (auto _ : state) benchmark::DoNotOptimize(three_cuttable_tc(tree, net).displays);
  state.counters["leaves"] = static_cast<double>(net.leaf_count());
}
BENCHMARK(BM_TreeContainment)->RangeMultiplier(2)->Range(8, 32);

void BM_BuildUPhi(benchmark::State& state) {
  auto cnf = random_2balanced_cnf(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_u_phi(cnf));
}
BENCHMARK(BM_BuildUPhi)->Arg(6)->Arg(24)->Arg(96)->Arg(384);

}  // namespace
BENCHMARK_MAIN();
