#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "morphcx/conllu.hpp"
#include "morphcx/measure_id.hpp"

namespace morphcx {

enum class ExclusionReason { NoMorphFeatures, NonAlphabeticScript };

constexpr std::string_view reason_name(ExclusionReason r) {
  return r == ExclusionReason::NoMorphFeatures ? "no-morph-features" : "non-alphabetic-script";
}

/// Treebank exclusion rules. Script lists match either a treebank id or a
/// language code; the allow list overrides the deny list.
struct ExclusionConfig {
  std::size_t min_feature_keys = 3;
  std::set<std::string, std::less<>> script_deny = {"zh", "ja", "yue", "lzh"};
  std::set<std::string, std::less<>> script_allow;
};

struct ExclusionEntry {
  std::string id;
  std::vector<ExclusionReason> reasons;

  /// no-morph-features removes a treebank from every measure; a script
  /// exclusion removes it from WS only.
  bool excludes(Measure m) const;
  std::string reasons_string() const;  ///< comma-joined reason names
};

struct Partition {
  std::vector<std::string> kept;
  std::vector<std::string> excluded;
};

struct ExclusionResult {
  std::vector<std::string> kept;         ///< ids with no exclusion reason
  std::vector<ExclusionEntry> excluded;  ///< ids with one or more reasons; see excludes()

  bool eligible(std::string_view id, Measure m) const;
  const ExclusionEntry* find(std::string_view id) const;
  Partition partition(Measure m, const std::vector<std::string>& ids) const;
};

std::vector<ExclusionReason> exclusion_reasons(std::string_view id, std::string_view language_code,
                                               std::size_t n_feature_keys,
                                               const ExclusionConfig& rules);

ExclusionResult apply_exclusions(const std::vector<Treebank>& treebanks, const ExclusionConfig& rules);

}  // namespace morphcx
