#pragma once

#include <optional>
#include <vector>

#include "morphcx/compression.hpp"
#include "morphcx/distortion.hpp"
#include "morphcx/entropy.hpp"
#include "morphcx/measure_id.hpp"
#include "morphcx/rng.hpp"
#include "morphcx/sampling.hpp"

namespace morphcx {

/// An unavailable measure (no lemma or feature annotation in the sample) is nullopt.
using MeasureValue = std::optional<double>;

FrequencyTable form_frequencies(const Sample& sample);
FrequencyTable lemma_frequencies(const Sample& sample);
/// "Key=Value" items, one per pair per lemma-bearing token.
FrequencyTable feature_pair_frequencies(const Sample& sample);

/// Distinct forms / tokens. Throws Error on an empty sample.
double ttr(const Sample& sample);
double word_entropy(const Sample& sample);
MeasureValue lemma_entropy(const Sample& sample);

/// Form types per lemma type, over lemma-bearing tokens.
MeasureValue msp(const Sample& sample);

enum class SynthesisUnit { FeatureKeys, FeaturePairs };

/// Largest per-lemma union of feature keys (or Key=Value pairs).
MeasureValue inflectional_synthesis(const Sample& sample, SynthesisUnit unit = SynthesisUnit::FeatureKeys);

MeasureValue feature_entropy(const Sample& sample);

/// CR(distorted) - CR(original) on the serialized texts.
double ws_from_texts(const TokenText& original, const TokenText& distorted,
                     const CompressorSetting& setting = {});

double word_structure_information(const Sample& sample, Rng& rng, const CompressorSetting& setting = {});

struct MeasureOptions {
  SynthesisUnit synthesis_unit = SynthesisUnit::FeatureKeys;
  CompressorSetting compressor;
};

/// Sample-level measure functions for run_repetitions, for the requested
/// measures (NegIA is not sample-level and is ignored here).
std::vector<NamedMeasure> sample_measures(const std::vector<Measure>& which, const MeasureOptions& options = {});

}  // namespace morphcx
