#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "emodetect/ontology.hpp"
#include "emodetect/scoring.hpp"

namespace {

std::string make_document(std::size_t words) {
  static const char* vocab[] = {"i",     "was",  "very",   "happy", "but",  "not",
                                "angry", "the",  "exam",   "went",  "well", "afraid",
                                "today", "lonely", "hooray", "and", "so",   "tired"};
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(vocab) - 1);
  std::string doc;
  for (std::size_t i = 0; i < words; ++i) {
    doc += vocab[pick(rng)];
    doc += (i % 12 == 11) ? ". " : " ";
  }
  return doc;
}

void BM_LoadBundledOntology(benchmark::State& state) {
  const std::string text = emodetect::EmotionOntology::bundled().serialize();
  for (auto _ : state) {
    benchmark::DoNotOptimize(emodetect::EmotionOntology::parse(text));
  }
}
BENCHMARK(BM_LoadBundledOntology);

void BM_Tokenize(benchmark::State& state) {
  const std::string doc = make_document(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(emodetect::tokenize(doc));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(doc.size()));
}
BENCHMARK(BM_Tokenize)->Range(64, 16384);

void BM_Detect(benchmark::State& state) {
  const auto& ontology = emodetect::EmotionOntology::bundled();
  const std::string doc = make_document(static_cast<std::size_t>(state.range(0)));
  const emodetect::DetectOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(emodetect::detect(doc, ontology, options));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(doc.size()));
}
BENCHMARK(BM_Detect)->Range(64, 16384);

}  // namespace
BENCHMARK_MAIN();
