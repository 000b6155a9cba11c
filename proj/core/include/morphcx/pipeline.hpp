#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "morphcx/config.hpp"
#include "morphcx/correlation.hpp"
#include "morphcx/distortion.hpp"
#include "morphcx/inflection.hpp"
#include "morphcx/pca.hpp"
#include "morphcx/ridge.hpp"
#include "morphcx/sampling.hpp"
#include "morphcx/tsv.hpp"

namespace morphcx {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitPartial = 2;

struct TreebankOutcome {
  ManifestEntry entry;
  bool ok = false;
  std::string message;  ///< failure reason when !ok
  std::size_t n_sentences = 0;
  std::size_t n_tokens = 0;
  std::size_t n_feature_keys = 0;
  std::vector<ExclusionReason> exclusions;
  MeasureSummary summary;
  std::optional<IAResult> ia;

  std::optional<double> value(Measure m) const;
  bool no_morph_features() const;
};

/// Measures one treebank already in memory.
TreebankOutcome measure_treebank(const Treebank& tb, const RunConfig& config, std::size_t jobs = 1);

/// Parses and measures every manifest entry; failures are isolated per treebank.
std::vector<TreebankOutcome> measure_manifest(const std::vector<ManifestEntry>& entries, const RunConfig& config,
                                              std::ostream& log);

/// Wide table: treebank, language, status, exclusion, then one column per measure.
TsvTable measure_matrix_table(const std::vector<TreebankOutcome>& outcomes, const RunConfig& config);
/// Long table: treebank, measure, mean, stddev, n_repetitions, available.
TsvTable measure_long_table(const std::vector<TreebankOutcome>& outcomes, const RunConfig& config);
TsvTable treebank_table(const std::vector<TreebankOutcome>& outcomes, const RunConfig& config);
std::string ia_sidecar_json(const std::vector<TreebankOutcome>& outcomes, const RunConfig& config);

/// Reads a wide measure table. With analysis_rows, drops failed treebanks and
/// those excluded for missing morphological features.
MeasureMatrix read_measure_matrix(const TsvTable& table, bool analysis_rows);

struct RidgeTarget {
  std::string name;
  std::optional<RidgeReport> report;
  std::string error;
};

struct AnalysisResult {
  std::vector<std::string> provenance;
  MeasureMatrix matrix;
  CorrelationMatrix pearson;
  CorrelationMatrix spearman;
  std::optional<PcaResult> pca;
  std::vector<std::string> pca_columns;
  std::vector<std::size_t> pca_rows;
  std::string pca_error;
  std::vector<RidgeTarget> ridge;
  std::vector<std::string> notes;   ///< data properties worth reporting (constant measures, undefined correlations)
  std::vector<std::string> errors;  ///< steps that could not be completed
};

AnalysisResult analyze(const MeasureMatrix& matrix, const RunConfig& config, std::ostream& log);

int cmd_measure(const RunConfig& config, std::ostream& log);
int cmd_analyze(const RunConfig& config, std::ostream& log);
int cmd_plot(const RunConfig& config, std::ostream& log);
int cmd_run_all(const RunConfig& config, std::ostream& log);

namespace output {
inline constexpr const char* kMeasureMatrix = "measure_matrix.tsv";
inline constexpr const char* kMeasures = "measures.tsv";
inline constexpr const char* kTreebanks = "treebanks.tsv";
inline constexpr const char* kIaSidecar = "ia_hyperparams.json";
inline constexpr const char* kCorrelations = "correlations.tsv";
inline constexpr const char* kPcaVariance = "pca_variance.tsv";
inline constexpr const char* kPcaLoadings = "pca_loadings.tsv";
inline constexpr const char* kPcaScores = "pca_scores.tsv";
inline constexpr const char* kRidge = "ridge.tsv";
inline constexpr const char* kMeasuresSvg = "measures.svg";
inline constexpr const char* kPcaScatterSvg = "pca_scatter.svg";
inline constexpr const char* kPcaComponentsSvg = "pca_components.svg";
inline constexpr const char* kWalsSvg = "wals_error_reduction.svg";
}  // namespace output

}  // namespace morphcx
