#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morphcx/conllu.hpp"
#include "morphcx/error.hpp"
#include "morphcx/rng.hpp"

namespace morphcx {

struct SampleConfig {
  std::size_t target_tokens = 20000;
  std::size_t repetitions = 100;
  std::uint64_t seed = 20190801;
};

/// Sentences drawn from a treebank. Views into the treebank, which must outlive
/// the sample. The last sentence may be a truncated prefix of its source.
struct Sample {
  std::vector<std::span<const Token>> sentences;
  std::size_t n_tokens = 0;

  /// Every sentence of a treebank, in order, untruncated.
  static Sample whole(const Treebank& tb);

  template <typename F>
  void for_each_token(F&& f) const {
    for (const auto& s : sentences) {
      for (const auto& t : s) f(t);
    }
  }
};

/// Draws sentences uniformly with replacement until target_tokens is reached,
/// truncating the last one so n_tokens == target_tokens.
/// Throws Error if the treebank has no tokens or target_tokens is zero.
Sample bootstrap_sample(const Treebank& tb, std::size_t target_tokens, Rng& rng);

/// A sample-level measure; nullopt means unavailable on this sample.
struct NamedMeasure {
  std::string name;
  std::function<std::optional<double>(const Sample&, Rng&)> fn;
};

struct MeasureStat {
  std::string name;
  bool available = false;
  double mean = 0.0;
  double stddev = 0.0;  ///< sample standard deviation (n - 1); 0 for a single value
  std::size_t n_repetitions = 0;
  std::vector<double> values;  ///< per repetition, in repetition order
};

struct MeasureSummary {
  std::vector<MeasureStat> stats;

  const MeasureStat* find(std::string_view name) const;
};

class RepetitionError : public Error {
 public:
  RepetitionError(std::size_t repetition, const std::string& what)
      : Error("repetition " + std::to_string(repetition) + ": " + what), repetition_(repetition) {}
  std::size_t repetition() const noexcept { return repetition_; }

 private:
  std::size_t repetition_;
};

/// Random stream for repetition r of a treebank; depends only on (seed, id, r).
Rng repetition_stream(std::uint64_t seed, std::string_view treebank_id, std::size_t repetition);

/// Stream for one measure inside a repetition.
Rng measure_stream(std::uint64_t seed, std::string_view treebank_id, std::size_t repetition,
                   std::string_view measure);

/// Runs config.repetitions independent bootstrap repetitions, possibly on
/// `jobs` threads, and aggregates each measure. A measure that is unavailable on
/// any repetition is reported unavailable.
MeasureSummary run_repetitions(const Treebank& tb, const SampleConfig& config,
                               const std::vector<NamedMeasure>& measures, std::size_t jobs = 1);

}  // namespace morphcx
