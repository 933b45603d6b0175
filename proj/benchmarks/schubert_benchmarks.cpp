#include <benchmark/benchmark.h>

#include "schubert/bgg.hpp"
#include "schubert/clan.hpp"
#include "schubert/monoid_action.hpp"
#include "schubert/structure_constants.hpp"
#include "schubert/weak_order_graph.hpp"

namespace {

using schubert::GroupType;

GroupType type_of(std::int64_t code) { return code == 0 ? GroupType::C : GroupType::D; }

void BM_EnumerateClans(benchmark::State& state) {
  const auto type = type_of(state.range(0));
  const int rank = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(schubert::enumerate_clans(type, rank));
}
BENCHMARK(BM_EnumerateClans)->ArgsProduct({{0, 1}, {3, 4, 5}})->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
  const auto type = type_of(state.range(0));
  const int rank = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(schubert::build_graph(type, rank));
}
BENCHMARK(BM_BuildGraph)->ArgsProduct({{0, 1}, {3, 4, 5}})->Unit(benchmark::kMillisecond);

void BM_ActWord(benchmark::State& state) {
  const auto gamma = schubert::Clan::parse("+,-,1,2,2,1,+,-");
  const std::vector<int> word{3, 2, 1, 4, 3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(schubert::act_word(GroupType::C, word, gamma));
}
BENCHMARK(BM_ActWord);

void BM_ProductTableOne(benchmark::State& state) {
  const auto u = schubert::SignedPermutation::parse(GroupType::C, "-4,1,2,3");
  const auto v = schubert::SignedPermutation::parse(GroupType::C, "1,-4,2,3");
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schubert::schubert_product(u, v, threads));
}
BENCHMARK(BM_ProductTableOne)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_OracleRepresentatives(benchmark::State& state) {
  const auto type = type_of(state.range(0));
  const int rank = static_cast<int>(state.range(1));
  for (auto _ : state) {
    schubert::BggOracle oracle(type, rank);
    oracle.precompute_all();
    benchmark::DoNotOptimize(oracle.cached_count());
  }
}
BENCHMARK(BM_OracleRepresentatives)
    ->Args({0, 3})
    ->Args({1, 3})
    ->Args({0, 4})
    ->Args({1, 4})
    ->Unit(benchmark::kMillisecond);

void BM_OracleConstant(benchmark::State& state) {
  const auto u = schubert::SignedPermutation::parse(GroupType::C, "-4,1,2,3");
  const auto v = schubert::SignedPermutation::parse(GroupType::C, "1,-4,2,3");
  const auto w = schubert::evaluate_word(GroupType::C, 4, std::vector<int>{3, 2, 1, 4, 3, 2, 1});
  schubert::BggOracle oracle(GroupType::C, 4);
  oracle.precompute_all();
  for (auto _ : state) benchmark::DoNotOptimize(oracle.oracle_constant(u, v, w));
}
BENCHMARK(BM_OracleConstant)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
