#include "morphcx/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "morphcx/parallel.hpp"

namespace morphcx {

Sample Sample::whole(const Treebank& tb) {
  Sample s;
  for (const auto& sent : tb.sentences) {
    s.sentences.emplace_back(sent.tokens);
    s.n_tokens += sent.tokens.size();
  }
  return s;
}

Sample bootstrap_sample(const Treebank& tb, std::size_t target_tokens, Rng& rng) {
  if (tb.sentences.empty() || tb.n_tokens == 0) throw Error("cannot sample from empty treebank " + tb.id);
  if (target_tokens == 0) throw Error("target_tokens must be at least 1");
  Sample s;
  while (s.n_tokens < target_tokens) {
    const auto& sent = tb.sentences[rng.uniform_index(tb.sentences.size())];
    if (sent.tokens.empty()) continue;
    const auto take = std::min(sent.tokens.size(), target_tokens - s.n_tokens);
    s.sentences.emplace_back(sent.tokens.data(), take);
    s.n_tokens += take;
  }
  return s;
}

const MeasureStat* MeasureSummary::find(std::string_view name) const {
  for (const auto& s : stats) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

Rng repetition_stream(std::uint64_t seed, std::string_view treebank_id, std::size_t repetition) {
  return Rng::derive({seed, Rng::tag(treebank_id), repetition});
}

Rng measure_stream(std::uint64_t seed, std::string_view treebank_id, std::size_t repetition,
                   std::string_view measure) {
  return Rng::derive({seed, Rng::tag(treebank_id), repetition, Rng::tag(measure)});
}

MeasureSummary run_repetitions(const Treebank& tb, const SampleConfig& config,
                               const std::vector<NamedMeasure>& measures, std::size_t jobs) {
  if (measures.empty()) throw Error("run_repetitions needs at least one measure");
  if (config.repetitions == 0) throw Error("repetitions must be at least 1");

  const auto n_reps = config.repetitions;
  std::vector<std::vector<std::optional<double>>> values(
      measures.size(), std::vector<std::optional<double>>(n_reps));

  parallel_for(n_reps, jobs, [&](std::size_t r) {
    try {
      auto rng = repetition_stream(config.seed, tb.id, r);
      const auto sample = bootstrap_sample(tb, config.target_tokens, rng);
      for (std::size_t k = 0; k < measures.size(); ++k) {
        auto mrng = measure_stream(config.seed, tb.id, r, measures[k].name);
        values[k][r] = measures[k].fn(sample, mrng);
      }
    } catch (const std::exception& e) {
      throw RepetitionError(r, e.what());
    }
  });

  MeasureSummary summary;
  for (std::size_t k = 0; k < measures.size(); ++k) {
    MeasureStat stat;
    stat.name = measures[k].name;
    stat.available = std::all_of(values[k].begin(), values[k].end(), [](const auto& v) { return v.has_value(); });
    if (stat.available) {
      stat.n_repetitions = n_reps;
      stat.values.reserve(n_reps);
      // Welford keeps a constant series at exactly zero spread
      double mean = 0.0;
      double m2 = 0.0;
      std::size_t k_seen = 0;
      for (const auto& v : values[k]) {
        stat.values.push_back(*v);
        ++k_seen;
        const double delta = *v - mean;
        mean += delta / static_cast<double>(k_seen);
        m2 += delta * (*v - mean);
      }
      stat.mean = mean;
      double ss = std::max(0.0, m2);
      stat.stddev = n_reps > 1 ? std::sqrt(ss / static_cast<double>(n_reps - 1)) : 0.0;
    }
    summary.stats.push_back(std::move(stat));
  }
  return summary;
}

}  // namespace morphcx
