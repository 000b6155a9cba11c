#include "morphcx/measures.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "morphcx/error.hpp"

namespace morphcx {

namespace {

void require_nonempty(const Sample& sample) {
  if (sample.n_tokens == 0) throw Error("measure on an empty sample");
}

std::string pair_string(const Feature& f) { return f.key + '=' + f.value; }

}  // namespace

FrequencyTable form_frequencies(const Sample& sample) {
  FrequencyTable t;
  sample.for_each_token([&](const Token& tok) { t.add(tok.form); });
  return t;
}

FrequencyTable lemma_frequencies(const Sample& sample) {
  FrequencyTable t;
  sample.for_each_token([&](const Token& tok) {
    if (tok.has_lemma()) t.add(tok.lemma);
  });
  return t;
}

FrequencyTable feature_pair_frequencies(const Sample& sample) {
  FrequencyTable t;
  sample.for_each_token([&](const Token& tok) {
    if (!tok.has_lemma()) return;
    for (const auto& f : tok.feats) t.add(pair_string(f));
  });
  return t;
}

double ttr(const Sample& sample) {
  require_nonempty(sample);
  return static_cast<double>(form_frequencies(sample).size()) / static_cast<double>(sample.n_tokens);
}

double word_entropy(const Sample& sample) {
  require_nonempty(sample);
  return plugin_entropy(form_frequencies(sample));
}

MeasureValue lemma_entropy(const Sample& sample) {
  const auto t = lemma_frequencies(sample);
  if (t.empty()) return std::nullopt;
  return plugin_entropy(t);
}

MeasureValue msp(const Sample& sample) {
  std::unordered_set<std::string_view> forms;
  std::unordered_set<std::string_view> lemmas;
  sample.for_each_token([&](const Token& tok) {
    if (!tok.has_lemma()) return;
    forms.insert(tok.form);
    lemmas.insert(tok.lemma);
  });
  if (lemmas.empty()) return std::nullopt;
  return static_cast<double>(forms.size()) / static_cast<double>(lemmas.size());
}

MeasureValue inflectional_synthesis(const Sample& sample, SynthesisUnit unit) {
  std::unordered_map<std::string_view, std::set<std::string>> per_lemma;
  sample.for_each_token([&](const Token& tok) {
    if (!tok.has_lemma() || !tok.has_feats()) return;
    auto& s = per_lemma[tok.lemma];
    for (const auto& f : tok.feats) s.insert(unit == SynthesisUnit::FeatureKeys ? f.key : pair_string(f));
  });
  if (per_lemma.empty()) return std::nullopt;
  std::size_t best = 0;
  for (const auto& [_, s] : per_lemma) best = std::max(best, s.size());
  return static_cast<double>(best);
}

MeasureValue feature_entropy(const Sample& sample) {
  const auto t = feature_pair_frequencies(sample);
  if (t.empty()) return std::nullopt;
  return plugin_entropy(t);
}

double ws_from_texts(const TokenText& original, const TokenText& distorted, const CompressorSetting& setting) {
  return compression_ratio(serialize(distorted), setting) - compression_ratio(serialize(original), setting);
}

double word_structure_information(const Sample& sample, Rng& rng, const CompressorSetting& setting) {
  require_nonempty(sample);
  const auto distorted = distort(sample, rng);
  return ws_from_texts(token_text(sample), distorted.text, setting);
}

std::vector<NamedMeasure> sample_measures(const std::vector<Measure>& which, const MeasureOptions& options) {
  std::vector<NamedMeasure> out;
  for (auto m : which) {
    const std::string name(measure_name(m));
    switch (m) {
      case Measure::TTR:
        out.push_back({name, [](const Sample& s, Rng&) -> MeasureValue { return ttr(s); }});
        break;
      case Measure::MSP:
        out.push_back({name, [](const Sample& s, Rng&) { return msp(s); }});
        break;
      case Measure::WS:
        out.push_back({name, [c = options.compressor](const Sample& s, Rng& r) -> MeasureValue {
                         return word_structure_information(s, r, c);
                       }});
        break;
      case Measure::WH:
        out.push_back({name, [](const Sample& s, Rng&) -> MeasureValue { return word_entropy(s); }});
        break;
      case Measure::LH:
        out.push_back({name, [](const Sample& s, Rng&) { return lemma_entropy(s); }});
        break;
      case Measure::IS:
        out.push_back({name, [u = options.synthesis_unit](const Sample& s, Rng&) {
                         return inflectional_synthesis(s, u);
                       }});
        break;
      case Measure::MFH:
        out.push_back({name, [](const Sample& s, Rng&) { return feature_entropy(s); }});
        break;
      case Measure::NegIA:
        break;
    }
  }
  return out;
}

}  // namespace morphcx
