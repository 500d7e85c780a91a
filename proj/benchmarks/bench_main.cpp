#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "mlakit/constructions.hpp"
#include "mlakit/enumeration.hpp"
#include "mlakit/fixtures.hpp"
#include "mlakit/isoclinism.hpp"
#include "mlakit/library.hpp"
#include "mlakit/structure.hpp"

using namespace mlakit;

namespace {

const std::vector<std::string> kGroups = {"V4", "S3", "Z2xZ4", "D4", "Q8", "Z2^3"};

void BM_StarSearch(benchmark::State& state) {
  const GroupTable G = library_group(kGroups[state.range(0)]);
  const unsigned workers = static_cast<unsigned>(state.range(1));
  StarSearch search(G);
  std::size_t found = 0;
  for (auto _ : state) {
    auto tables = search.solve({}, workers);
    found = tables.size();
    benchmark::DoNotOptimize(tables);
  }
  state.SetLabel(kGroups[state.range(0)] + ", " + std::to_string(found) + " tables");
}
BENCHMARK(BM_StarSearch)->ArgsProduct({{0, 1, 2, 3, 4, 5}, {1}})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_Dedupe(benchmark::State& state) {
  const auto structures = enumerate_star_structures(library_group("Z2^3"));
  for (auto _ : state) benchmark::DoNotOptimize(dedupe_up_to_isomorphism(structures));
  state.SetLabel(std::to_string(structures.size()) + " structures");
}
BENCHMARK(BM_Dedupe)->Unit(benchmark::kMillisecond);

void BM_AreIsoclinic(benchmark::State& state) {
  const FiniteMLA G = fixtures::example_a();
  const FiniteMLA H = fixtures::v4_star_a();
  for (auto _ : state) benchmark::DoNotOptimize(are_isoclinic(G, H));
}
BENCHMARK(BM_AreIsoclinic);

void BM_PartitionCatalog(benchmark::State& state) {
  std::vector<FiniteMLA> catalog;
  for (const auto& ng : group_library(8))
    for (auto& a : dedupe_up_to_isomorphism(enumerate_star_structures(ng.group))) catalog.push_back(std::move(a));
  for (auto _ : state) benchmark::DoNotOptimize(partition_by_isoclinism(catalog));
  state.SetLabel(std::to_string(catalog.size()) + " algebras");
}
BENCHMARK(BM_PartitionCatalog)->Unit(benchmark::kMillisecond);

void BM_CommonDescendant(benchmark::State& state) {
  const FiniteMLA G = fixtures::q8_improper();
  const FiniteMLA H = direct_product(G, fixtures::z2_trivial());
  const auto pair = are_isoclinic(G, H);
  if (!pair) {
    state.SkipWithError("inputs are not isoclinic");
    return;
  }
  Limits limits;
  limits.construction_cap = 1024;
  for (auto _ : state) benchmark::DoNotOptimize(common_descendant(G, H, *pair, limits));
}
BENCHMARK(BM_CommonDescendant)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
