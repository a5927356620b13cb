#include <benchmark/benchmark.h>

#include <string>

#include "latentid/latentid.hpp"

namespace {

using namespace latentid;

const char* const kFixtures[] = {"figure1", "figure2a", "figure2b", "figure3", "figure4", "figure5"};

LatentModel fixture(std::int64_t k) {
  return load_model(std::string(LATENTID_MODELS_DIR) + "/" + kFixtures[k] + ".model");
}

void BM_Classify(benchmark::State& state) {
  const LatentModel m = fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(m));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Classify)->DenseRange(0, 5);

void BM_Jacobian(benchmark::State& state) {
  const LatentModel m = fixture(state.range(0));
  const ParamIndex idx = build_param_index(m);
  const JacobianEvaluator eval(m, idx);
  auto rng = trial_engine(0, 0);
  const BetaVector beta = sample_beta(idx.size(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(eval.jacobian(beta));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Jacobian)->DenseRange(0, 5);

void BM_RankAtPoint(benchmark::State& state) {
  const LatentModel m = fixture(state.range(0));
  const ParamIndex idx = build_param_index(m);
  auto rng = trial_engine(0, 0);
  const Eigen::MatrixXd d = jacobian(m, idx, sample_beta(idx.size(), rng));
  for (auto _ : state) benchmark::DoNotOptimize(numeric_rank(d));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_RankAtPoint)->DenseRange(0, 5);

void BM_RankOnSystem(benchmark::State& state) {
  const LatentModel m = fixture(5);
  const SingularSystem sys = full_system(m);
  for (auto _ : state) benchmark::DoNotOptimize(rank_on_system(m, sys, 10, 0));
}
BENCHMARK(BM_RankOnSystem)->Unit(benchmark::kMillisecond);

void BM_IdentifyingSequences(benchmark::State& state) {
  const LatentModel m = fixture(4);
  const Graph g = latent_neighbourhood(m).graph;
  const auto subsets = complete_subsets(g, 2);
  for (auto _ : state) {
    for (NodeSet s : subsets) benchmark::DoNotOptimize(find_identifying_sequence(g, s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(subsets.size()));
}
BENCHMARK(BM_IdentifyingSequences);

void BM_MaximalCliques(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((i * 7 + j * 13) % 3 != 0) edges.emplace_back(i, j);
    }
  }
  const Graph g(n, edges);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
}
BENCHMARK(BM_MaximalCliques)->RangeMultiplier(2)->Range(8, 32);

}  // namespace

BENCHMARK_MAIN();
