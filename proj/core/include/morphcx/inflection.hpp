#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <tuple>
#include <string>
#include <unordered_map>
#include <vector>

#include "morphcx/edit_script.hpp"
#include "morphcx/entropy.hpp"
#include "morphcx/rng.hpp"
#include "morphcx/sampling.hpp"

namespace morphcx {

/// bundle is the canonical sorted "Key=Value|Key=Value" string.
struct InflectionInstance {
  std::string lemma;
  std::string bundle;
  std::string form;

  friend bool operator==(const InflectionInstance&, const InflectionInstance&) = default;
};

/// Canonical bundle string for pairs given in any order.
std::string canonical_bundle(std::vector<Feature> feats);

/// One instance per token with a form, a lemma and features; exact duplicate
/// triples are kept once, in first-occurrence order.
std::vector<InflectionInstance> extract_instances(const Sample& sample);

struct Hyperparams {
  int ngram_order = 3;  ///< longest lemma-edge n-gram
  int epochs = 10;
  double step = 1.0;

  friend bool operator==(const Hyperparams&, const Hyperparams&) = default;
};

/// Binary feature names: lemma prefixes "^a".."^abc" and suffixes "c$".."abc$"
/// up to ngram_order, "F:Key=Value" per pair, "B:<bundle>" and
/// "BL:<bundle>|<final lemma character>". Sorted and unique.
std::vector<std::string> featurize(std::string_view lemma, std::string_view bundle, int ngram_order);

/// Multiclass linear model over edit-script classes, with averaged weights.
class InflectionModel {
 public:
  const std::vector<EditScript>& classes() const noexcept { return classes_; }
  const Hyperparams& hyperparams() const noexcept { return hp_; }

  std::vector<double> scores(std::string_view lemma, std::string_view bundle) const;

  /// Class indices from best to worst score; ties go to the lower index.
  std::vector<std::size_t> ranking(std::string_view lemma, std::string_view bundle) const;

  /// Best-ranked class whose drops fit the lemma, if any.
  std::optional<std::size_t> predict_class(std::string_view lemma, std::string_view bundle) const;

  /// The predicted form; the lemma itself if no class applies.
  std::string predict(std::string_view lemma, std::string_view bundle) const;

  /// Averaged weights as (feature name, class label, weight), sorted; for inspection and tests.
  std::vector<std::tuple<std::string, std::string, double>> weights() const;

 private:
  friend InflectionModel train(const std::vector<InflectionInstance>&, const Hyperparams&, Rng&);

  Hyperparams hp_;
  std::vector<EditScript> classes_;
  std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>> feature_ids_;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> weights_;  ///< per feature: (class, weight)
};

/// Averaged cost-augmented perceptron. rng only shuffles instance order per epoch.
/// Throws Error on an empty training set.
InflectionModel train(const std::vector<InflectionInstance>& instances, const Hyperparams& hp, Rng& rng);

double exact_match_accuracy(const InflectionModel& model, const std::vector<InflectionInstance>& test);

struct SearchSpace {
  int ngram_min = 1;
  int ngram_max = 4;
  int epochs_min = 5;
  int epochs_max = 30;
  double step_min = 0.01;  ///< log-uniform lower bound
  double step_max = 1.0;
  std::size_t draws = 20;
  std::size_t folds = 3;
};

Hyperparams draw_hyperparams(const SearchSpace& space, Rng& rng);

struct DrawResult {
  Hyperparams hyperparams;
  std::vector<double> fold_accuracy;
  double mean_accuracy = 0.0;
};

struct IAResult {
  std::vector<double> fold_accuracy;  ///< of the best draw
  double mean_accuracy = 0.0;
  Hyperparams best;
  std::size_t best_draw = 0;
  std::size_t n_instances = 0;
  std::vector<DrawResult> draws;

  double measure() const { return -mean_accuracy; }
};

/// Fold index per instance position after a deterministic shuffle; a partition
/// into `folds` parts whose sizes differ by at most one.
std::vector<std::size_t> fold_assignment(std::size_t n, std::size_t folds, Rng& rng);

/// Random search over `space`; each draw is scored by k-fold exact-match
/// accuracy and the best mean wins (ties: lowest draw index).
/// nullopt when there are fewer instances than folds.
std::optional<IAResult> cross_validate(const std::vector<InflectionInstance>& instances, const SearchSpace& space,
                                       Rng& rng, std::size_t jobs = 1);

}  // namespace morphcx
