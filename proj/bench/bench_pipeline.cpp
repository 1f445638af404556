// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "mdastyl/pipeline.hpp"
#include "mdastyl/stats.hpp"

using namespace mdastyl;

namespace {

const std::filesystem::path kData = MDASTYL_DATA_DIR;

const TaggerModel& model() {
  static const TaggerModel m = train(load_treebank(kData / "treebank" / "sample.txt"));
  return m;
}

const std::vector<Document>& docs() {
  static const auto d = [] {
    const auto registry = load_registry(kData / "fixtures" / "registry.txt");
    auto feed = load_feed(kData / "fixtures" / "mixed_feed.jsonl");
    const auto more = load_feed(kData / "fixtures" / "differentiation_feed.jsonl");
    feed.insert(feed.end(), more.begin(), more.end());
    IngestOptions o;
    o.balance = false;
    return ingest(feed, registry, o).documents;
  }();
  return d;
}

PipelineSettings settings() {
  PipelineSettings s;
  s.model = &model();
  s.rules = &default_rules();
  s.reference = &default_reference();
  return s;
}

std::vector<FeatureVector> rows(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<FeatureVector> out(n);
  for (auto& r : out) {
    for (auto& v : r) v = nd(rng);
  }
  return out;
}

void BM_ScoreSerial(benchmark::State& state) {
  const auto s = settings();
  for (auto _ : state) benchmark::DoNotOptimize(score_documents_serial(docs(), s));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(docs().size()));
}

void BM_ScoreParallel(benchmark::State& state) {
  const auto s = settings();
  for (auto _ : state) benchmark::DoNotOptimize(score_documents(docs(), s));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(docs().size()));
}

void BM_CorrelationSerial(benchmark::State& state) {
  const auto r = rows(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(correlation_matrix_serial(r, "bench"));
}

void BM_CorrelationParallel(benchmark::State& state) {
  const auto r = rows(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(correlation_matrix(r, "bench"));
}

}  // namespace

BENCHMARK(BM_ScoreSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorrelationSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CorrelationParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
