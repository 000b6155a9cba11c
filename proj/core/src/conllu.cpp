#include "morphcx/conllu.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "morphcx/error.hpp"
#include "morphcx/text.hpp"

namespace morphcx {

namespace {

constexpr std::size_t kColumns = 10;

enum class LineKind { Word, Range, Empty };

LineKind classify_id(std::string_view id, std::size_t line_no) {
  if (id.empty()) throw ParseError("empty ID column", line_no);
  const bool digits_only = std::all_of(id.begin(), id.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (digits_only) return LineKind::Word;
  const auto dash = id.find('-');
  const auto dot = id.find('.');
  auto is_num = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (dash != std::string_view::npos && is_num(id.substr(0, dash)) && is_num(id.substr(dash + 1))) {
    return LineKind::Range;
  }
  if (dot != std::string_view::npos && is_num(id.substr(0, dot)) && is_num(id.substr(dot + 1))) {
    return LineKind::Empty;
  }
  throw ParseError("invalid ID '" + std::string(id) + "'", line_no);
}

std::string unannotated_to_empty(std::string_view col, bool fold) {
  if (col == "_") return {};
  return fold ? text::lowercase(col) : std::string(col);
}

}  // namespace

std::vector<Feature> parse_feats(std::string_view column) {
  std::vector<Feature> feats;
  if (column == "_" || column.empty()) return feats;
  for (auto item : text::split(column, '|')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
      throw ParseError("unparsable FEATS item '" + std::string(item) + "'", 0);
    }
    feats.push_back({std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))});
  }
  std::sort(feats.begin(), feats.end());
  feats.erase(std::unique(feats.begin(), feats.end()), feats.end());
  for (std::size_t i = 1; i < feats.size(); ++i) {
    if (feats[i].key == feats[i - 1].key) {
      throw ParseError("conflicting values for feature key '" + feats[i].key + "'", 0);
    }
  }
  return feats;
}

std::string feats_to_string(const std::vector<Feature>& feats) {
  std::string out;
  for (const auto& f : feats) {
    if (!out.empty()) out += '|';
    out += f.key;
    out += '=';
    out += f.value;
  }
  return out;
}

Treebank parse_conllu(std::string_view input, std::string id, std::string language_code,
                      const ParseOptions& options) {
  Treebank tb;
  tb.id = std::move(id);
  tb.language_code = std::move(language_code);
  std::set<std::string, std::less<>> keys;

  Sentence current;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      tb.n_tokens += current.tokens.size();
      tb.sentences.push_back(std::move(current));
      current = Sentence{};
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < input.size()) {
    auto end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    std::string_view line = input.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (text::trim(line).empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;

    const auto cols = text::split(line, '\t');
    if (cols.size() != kColumns) {
      throw ParseError("expected " + std::to_string(kColumns) + " tab-separated columns, found " +
                           std::to_string(cols.size()),
                       line_no);
    }
    if (classify_id(cols[0], line_no) != LineKind::Word) continue;

    Token tok;
    tok.form = unannotated_to_empty(cols[1], options.lowercase);
    tok.lemma = unannotated_to_empty(cols[2], options.lowercase);
    tok.upos = cols[3] == "_" ? std::string() : std::string(cols[3]);
    try {
      tok.feats = parse_feats(cols[5]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    for (const auto& f : tok.feats) keys.insert(f.key);
    current.tokens.push_back(std::move(tok));
  }
  flush();

  if (tb.n_tokens == 0) throw ParseError("no token lines in input", 0);
  tb.n_feature_keys = keys.size();
  return tb;
}

std::vector<ManifestEntry> parse_manifest(std::string_view input,
                                          const std::filesystem::path& base_dir) {
  std::vector<ManifestEntry> entries;
  std::size_t line_no = 0;
  for (auto raw : text::split(input, '\n')) {
    ++line_no;
    const auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = text::split(line, '\t');
    if (cols.size() < 3) throw ParseError("manifest rows need id, language_code, path", line_no);
    if (entries.empty() && cols[0] == "id") continue;
    std::filesystem::path p{std::string(text::trim(cols[2]))};
    if (p.is_relative()) p = base_dir / p;
    entries.push_back({std::string(text::trim(cols[0])), std::string(text::trim(cols[1])), p});
  }
  if (entries.empty()) throw ParseError("manifest lists no treebanks", 0);
  return entries;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace morphcx
