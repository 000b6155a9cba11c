#include "morphcx/exclusion.hpp"

#include <algorithm>

namespace morphcx {

bool ExclusionEntry::excludes(Measure m) const {
  for (auto r : reasons) {
    if (r == ExclusionReason::NoMorphFeatures) return true;
    if (r == ExclusionReason::NonAlphabeticScript && m == Measure::WS) return true;
  }
  return false;
}

std::string ExclusionEntry::reasons_string() const {
  std::string out;
  for (auto r : reasons) {
    if (!out.empty()) out += ',';
    out += reason_name(r);
  }
  return out;
}

const ExclusionEntry* ExclusionResult::find(std::string_view id) const {
  auto it = std::find_if(excluded.begin(), excluded.end(), [&](const auto& e) { return e.id == id; });
  return it == excluded.end() ? nullptr : &*it;
}

bool ExclusionResult::eligible(std::string_view id, Measure m) const {
  const auto* e = find(id);
  return e == nullptr || !e->excludes(m);
}

Partition ExclusionResult::partition(Measure m, const std::vector<std::string>& ids) const {
  Partition p;
  for (const auto& id : ids) (eligible(id, m) ? p.kept : p.excluded).push_back(id);
  return p;
}

std::vector<ExclusionReason> exclusion_reasons(std::string_view id, std::string_view language_code,
                                               std::size_t n_feature_keys,
                                               const ExclusionConfig& rules) {
  std::vector<ExclusionReason> reasons;
  if (n_feature_keys < rules.min_feature_keys) reasons.push_back(ExclusionReason::NoMorphFeatures);
  const bool allowed = rules.script_allow.contains(id) || rules.script_allow.contains(language_code);
  const bool denied = rules.script_deny.contains(id) || rules.script_deny.contains(language_code);
  if (denied && !allowed) reasons.push_back(ExclusionReason::NonAlphabeticScript);
  return reasons;
}

ExclusionResult apply_exclusions(const std::vector<Treebank>& treebanks, const ExclusionConfig& rules) {
  ExclusionResult result;
  for (const auto& tb : treebanks) {
    auto reasons = exclusion_reasons(tb.id, tb.language_code, tb.n_feature_keys, rules);
    if (reasons.empty()) {
      result.kept.push_back(tb.id);
    } else {
      result.excluded.push_back({tb.id, std::move(reasons)});
    }
  }
  return result;
}

}  // namespace morphcx
