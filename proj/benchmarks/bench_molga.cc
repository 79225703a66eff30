#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "molga/canonical.h"
#include "molga/engine.h"
#include "molga/fingerprint.h"
#include "molga/genops.h"
#include "molga/oracles.h"
#include "molga/random.h"
#include "molga/sampler.h"
#include "molga/smiles.h"

namespace {

const std::vector<std::string> &reference_smiles() {
  static const std::vector<std::string> smiles = [] {
    std::vector<std::string> out;
    std::ifstream in(std::string(MOLGA_DATA_DIR) + "/reference_1k.smi");
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string s;
      if (fields >> s && s[0] != '#') out.push_back(s);
    }
    return out;
  }();
  return smiles;
}

const std::vector<molga::MolGraph> &reference() {
  static const std::vector<molga::MolGraph> graphs = [] {
    std::vector<molga::MolGraph> out;
    for (const std::string &s : reference_smiles()) out.push_back(molga::parse_smiles(s));
    return out;
  }();
  return graphs;
}

void BM_ParseSmiles(benchmark::State &state) {
  const auto &smiles = reference_smiles();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(molga::parse_smiles(smiles[i++ % smiles.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ParseSmiles);

void BM_CanonicalForm(benchmark::State &state) {
  const auto &graphs = reference();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(molga::canonical_form(graphs[i++ % graphs.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CanonicalForm);

void BM_MorganFingerprint(benchmark::State &state) {
  const auto &graphs = reference();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(molga::morgan_fingerprint(graphs[i++ % graphs.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MorganFingerprint);

void BM_Mutate(benchmark::State &state) {
  const auto &graphs = reference();
  molga::Rng rng(1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(molga::mutate(graphs[i++ % graphs.size()], rng));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Mutate);

void BM_Crossover(benchmark::State &state) {
  const auto &graphs = reference();
  molga::Rng rng(2);
  for (auto _ : state) {
    const auto &a = graphs[rng.index(graphs.size())];
    const auto &b = graphs[rng.index(graphs.size())];
    benchmark::DoNotOptimize(molga::crossover(a, b, rng));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Crossover);

void BM_SampleBatch(benchmark::State &state) {
  molga::Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(molga::sample_batch(1000, 5, rng));
  }
}
BENCHMARK(BM_SampleBatch);

// A full rediscovery run; range(0) is the budget.
void BM_RediscoveryRun(benchmark::State &state) {
  molga::GAConfig config;
  config.budget = static_cast<std::size_t>(state.range(0));
  const molga::Oracle oracle =
      molga::similarity_oracle(molga::parse_smiles("CC(=O)Oc1ccccc1C(=O)O"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(molga::run(config, oracle, reference()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RediscoveryRun)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
