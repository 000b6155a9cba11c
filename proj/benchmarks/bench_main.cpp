#include <benchmark/benchmark.h>

#include <string>

#include "morphcx/correlation.hpp"
#include "morphcx/inflection.hpp"
#include "morphcx/measures.hpp"
#include "morphcx/ridge.hpp"
#include "morphcx/sampling.hpp"

namespace {

using namespace morphcx;

// 40k tokens over 2000 stems x 12 suffixes with a skewed stem distribution
const Treebank& corpus() {
  static const Treebank tb = [] {
    Rng rng(1);
    std::vector<std::string> stems;
    for (int i = 0; i < 2000; ++i) {
      std::string s;
      for (auto n = 3 + rng.uniform_index(5); n > 0; --n) s += static_cast<char>('a' + rng.uniform_index(20));
      stems.push_back(s);
    }
    const char* suffixes[] = {"", "s", "en", "ta", "lla", "ssa", "sta", "an", "ko", "i", "ne", "ille"};
    const char* cases[] = {"Nom", "Gen", "Par", "Ess", "Ine", "Ela", "Ill", "Ade", "Abl", "All", "Tra", "Com"};
    Treebank t;
    t.id = "bench";
    t.language_code = "xx";
    for (int s = 0; s < 4000; ++s) {
      Sentence sent;
      for (int k = 0; k < 10; ++k) {
        const auto u = rng.uniform01();
        const auto& stem = stems[static_cast<std::size_t>(u * u * 2000)];
        const auto c = rng.uniform_index(12);
        sent.tokens.push_back({stem + suffixes[c], stem, "X", {{"Case", cases[c]}, {"Number", "Sing"}}});
      }
      t.n_tokens += sent.tokens.size();
      t.sentences.push_back(std::move(sent));
    }
    t.n_feature_keys = 2;
    return t;
  }();
  return tb;
}

void BM_Bootstrap(benchmark::State& state) {
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(bootstrap_sample(corpus(), 20000, rng));
}
BENCHMARK(BM_Bootstrap);

void BM_FrequencyMeasures(benchmark::State& state) {
  Rng rng(3);
  const auto sample = bootstrap_sample(corpus(), 20000, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ttr(sample));
    benchmark::DoNotOptimize(word_entropy(sample));
    benchmark::DoNotOptimize(lemma_entropy(sample));
    benchmark::DoNotOptimize(msp(sample));
    benchmark::DoNotOptimize(inflectional_synthesis(sample));
    benchmark::DoNotOptimize(feature_entropy(sample));
  }
}
BENCHMARK(BM_FrequencyMeasures)->Unit(benchmark::kMillisecond);

void BM_WordStructure(benchmark::State& state) {
  Rng rng(4);
  const auto sample = bootstrap_sample(corpus(), 20000, rng);
  for (auto _ : state) benchmark::DoNotOptimize(word_structure_information(sample, rng));
}
BENCHMARK(BM_WordStructure)->Unit(benchmark::kMillisecond);

void BM_InflectionTrain(benchmark::State& state) {
  Rng rng(5);
  const auto instances = extract_instances(bootstrap_sample(corpus(), 20000, rng));
  for (auto _ : state) {
    Rng train_rng(6);
    benchmark::DoNotOptimize(train(instances, {3, static_cast<int>(state.range(0)), 0.5}, train_rng));
  }
  state.counters["instances"] = static_cast<double>(instances.size());
}
BENCHMARK(BM_InflectionTrain)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_RidgeNestedLoocv(benchmark::State& state) {
  Rng rng(7);
  const auto n = state.range(0);
  Eigen::MatrixXd x(n, 90);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < 90; ++j) x(i, j) = rng.uniform01() < 0.3 ? 1.0 : 0.0;
    y(i) = rng.normal();
  }
  const auto alphas = default_alpha_grid();
  for (auto _ : state) benchmark::DoNotOptimize(ridge_loocv(x, y, alphas));
}
BENCHMARK(BM_RidgeNestedLoocv)->Arg(35)->Arg(70)->Unit(benchmark::kMillisecond);

void BM_SpearmanPermutation(benchmark::State& state) {
  Rng rng(8);
  std::vector<double> x(60), y(60);
  for (std::size_t i = 0; i < 60; ++i) {
    x[i] = rng.normal();
    y[i] = x[i] + rng.normal();
  }
  const SignificanceOptions sig{SignificanceTest::Permutation, 0.05, 9999, 1};
  for (auto _ : state) benchmark::DoNotOptimize(spearman(x, y, sig));
}
BENCHMARK(BM_SpearmanPermutation)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
