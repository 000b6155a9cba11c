#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace morphcx {

/// The 28 morphology-related WALS features used by default.
const std::vector<std::string>& default_wals_features();

/// One language's categorical values; a missing feature has no entry.
struct WalsRecord {
  std::string language_code;
  std::map<std::string, std::string> values;

  bool empty() const noexcept { return values.empty(); }
};

/// RFC 4180 CSV: quoted fields may hold commas, quotes ("") and newlines.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Reads a WALS export with a header row. The language column is looked up by
/// name; every id in feature_list must appear in the header (Error listing the
/// missing ones otherwise). Other columns are ignored; empty cells are missing.
std::vector<WalsRecord> load_wals(std::string_view csv_text, const std::vector<std::string>& feature_list,
                                  std::string_view language_column = "language_code");

/// One id per line or comma separated; '#' starts a comment.
std::vector<std::string> parse_feature_list(std::string_view text);

/// One-hot design matrix. Columns are grouped by feature, in feature_list
/// order; each block holds one column per observed category (lexicographic)
/// followed by a "missing" column.
struct DesignMatrix {
  std::vector<std::string> row_languages;
  std::vector<std::string> column_names;        ///< "22A=<category>" or "22A:missing"
  std::vector<std::size_t> column_feature;      ///< index into features
  std::vector<std::string> features;
  Eigen::MatrixXd values;
};

/// Rows follow `languages` (repeats allowed); a language without a record is
/// all-missing. Categories are those observed among the listed languages.
DesignMatrix encode(const std::vector<WalsRecord>& records, const std::vector<std::string>& languages,
                    const std::vector<std::string>& feature_list);

}  // namespace morphcx
