#include "morphcx/edit_script.hpp"

#include <vector>

#include "morphcx/text.hpp"

namespace morphcx {

std::string EditScript::label() const {
  return std::to_string(prefix_drop) + '\t' + prefix_add + '\t' + std::to_string(suffix_drop) + '\t' + suffix_add;
}

EditScript derive_edit_script(std::string_view lemma_utf8, std::string_view form_utf8) {
  const auto lemma = text::decode_utf8(lemma_utf8);
  const auto form = text::decode_utf8(form_utf8);
  const std::size_t n = lemma.size();
  const std::size_t m = form.size();

  // run[j + 1] = length of the common run ending at lemma[i], form[j]
  std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
  std::size_t best_len = 0, best_lemma_end = 0, best_form_end = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cur[j + 1] = lemma[i] == form[j] ? prev[j] + 1 : 0;
      // strict '>' in (i, j) order keeps the leftmost anchor among equals
      if (cur[j + 1] > best_len) {
        best_len = cur[j + 1];
        best_lemma_end = i + 1;
        best_form_end = j + 1;
      }
    }
    std::swap(prev, cur);
  }

  EditScript s;
  if (best_len == 0) {
    s.suffix_drop = n;
    s.suffix_add = std::string(form_utf8);
    return s;
  }
  const std::size_t lemma_start = best_lemma_end - best_len;
  const std::size_t form_start = best_form_end - best_len;
  s.prefix_drop = lemma_start;
  s.prefix_add = text::encode_utf8(std::u32string_view(form).substr(0, form_start));
  s.suffix_drop = n - best_lemma_end;
  s.suffix_add = text::encode_utf8(std::u32string_view(form).substr(best_form_end));
  return s;
}

std::optional<std::string> apply_edit_script(const EditScript& script, std::string_view lemma_utf8) {
  const auto lemma = text::decode_utf8(lemma_utf8);
  if (!script.applicable(lemma.size())) return std::nullopt;
  std::string out = script.prefix_add;
  out += text::encode_utf8(
      std::u32string_view(lemma).substr(script.prefix_drop, lemma.size() - script.prefix_drop - script.suffix_drop));
  out += script.suffix_add;
  return out;
}

}  // namespace morphcx
