#include <benchmark/benchmark.h>

#include "pageclass/evaluation.hpp"
#include "pageclass/synth.hpp"

using namespace pageclass;

namespace {

struct Fixture {
  std::vector<RawDocument> docs;
  std::vector<TokenList> tokens;
  NbcModel model;

  Fixture() {
    SynthParams p;
    p.seed = 1;
    p.docs_per_class = 2000;
    p.vocab_positive = 5000;
    p.vocab_negative = 5000;
    p.overlap = 0.8;
    p.min_length = 200;
    p.max_length = 600;
    docs = synthesize_corpus(p);
    tokens = apply_view_all(docs, View::FullText, PipelineConfig::defaults());
    model = train(docs, ExperimentConfig{});
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_ApplyViewSerial(benchmark::State& state) {
  const auto& f = fixture();
  const auto config = PipelineConfig::defaults();
  for (auto _ : state) {
    std::vector<TokenList> out;
    out.reserve(f.docs.size());
    for (const auto& d : f.docs) out.push_back(apply_view(d, View::FullText, config));
    benchmark::DoNotOptimize(out);
  }
}

void BM_ApplyViewParallel(benchmark::State& state) {
  const auto& f = fixture();
  const auto config = PipelineConfig::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(apply_view_all(f.docs, View::FullText, config));
}

void BM_BuildModelSerial(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(build_model_serial(f.tokens, Label::Positive));
}

void BM_BuildModelParallel(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(build_model(f.tokens, Label::Positive));
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(classify_all_serial(f.model, f.docs));
}

void BM_ClassifyParallel(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(classify_all(f.model, f.docs));
}

void BM_EvaluateSerial(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_serial(f.model, f.docs));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(f.model, f.docs));
}

}  // namespace

BENCHMARK(BM_ApplyViewSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ApplyViewParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildModelSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildModelParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassifySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassifyParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluateSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluateParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
