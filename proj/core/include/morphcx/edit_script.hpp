#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace morphcx {

/// Prefix/suffix rewrite of a lemma. Drop counts are in code points.
struct EditScript {
  std::size_t prefix_drop = 0;
  std::string prefix_add;
  std::size_t suffix_drop = 0;
  std::string suffix_add;

  friend bool operator==(const EditScript&, const EditScript&) = default;

  bool applicable(std::size_t lemma_length) const noexcept {
    return prefix_drop + suffix_drop <= lemma_length;
  }
  bool is_identity() const noexcept {
    return prefix_drop == 0 && suffix_drop == 0 && prefix_add.empty() && suffix_add.empty();
  }
  /// Unambiguous key; forms never contain tabs.
  std::string label() const;
};

/// Anchors on the longest common substring of lemma and form (ties: leftmost in
/// the lemma, then leftmost in the form). Without a common character the script
/// drops the whole lemma and appends the whole form.
EditScript derive_edit_script(std::string_view lemma, std::string_view form);

/// nullopt if the drops do not fit the lemma.
std::optional<std::string> apply_edit_script(const EditScript& script, std::string_view lemma);

}  // namespace morphcx
