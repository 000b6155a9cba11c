#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "morphcx/compression.hpp"
#include "morphcx/conllu.hpp"
#include "morphcx/correlation.hpp"
#include "morphcx/exclusion.hpp"
#include "morphcx/inflection.hpp"
#include "morphcx/measure_id.hpp"
#include "morphcx/measures.hpp"
#include "morphcx/sampling.hpp"

namespace morphcx {

enum class WalsRows { PerTreebank, PerLanguage };

struct RunConfig {
  std::filesystem::path manifest;
  std::filesystem::path wals_csv;       ///< empty: ridge analysis is skipped
  std::filesystem::path wals_features;  ///< empty: built-in 28-feature list
  std::string wals_language_column = "language_code";
  WalsRows wals_rows = WalsRows::PerTreebank;

  SampleConfig sampling;
  ExclusionConfig exclusion;
  ParseOptions parse;
  std::vector<Measure> measures{kAllMeasures.begin(), kAllMeasures.end()};
  MeasureOptions measure_options;
  SearchSpace ia_search;
  std::vector<double> alpha_grid;  ///< empty: default grid
  SignificanceOptions significance;

  std::filesystem::path out_dir = "out";
  std::size_t jobs = 1;

  bool measure_enabled(Measure m) const;
  /// One line of key=value pairs written at the top of every output file.
  std::string provenance() const;
};

/// Parses the flat "key = value" format; '#' starts a comment. Relative paths
/// resolve against base_dir. Unknown keys and bad values throw ConfigError.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);

/// Checks that referenced input files exist and values are in range.
void validate(const RunConfig& config, bool need_manifest);

}  // namespace morphcx
