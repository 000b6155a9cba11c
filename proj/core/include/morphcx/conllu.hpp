#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace morphcx {

struct Feature {
  std::string key;
  std::string value;

  friend bool operator==(const Feature&, const Feature&) = default;
  friend auto operator<=>(const Feature&, const Feature&) = default;
};

/// One basic-node word line. An empty form or lemma means the column held "_".
/// feats is sorted by key and holds each key at most once.
struct Token {
  std::string form;
  std::string lemma;
  std::string upos;
  std::vector<Feature> feats;

  bool has_lemma() const noexcept { return !lemma.empty(); }
  bool has_feats() const noexcept { return !feats.empty(); }
};

struct Sentence {
  std::vector<Token> tokens;
};

struct Treebank {
  std::string id;
  std::string language_code;
  std::vector<Sentence> sentences;
  std::size_t n_tokens = 0;
  std::size_t n_feature_keys = 0;
};

struct ParseOptions {
  bool lowercase = false;  ///< fold forms and lemmas to lower case
};

/// Parses CoNLL-U text. Multiword-token ranges ("1-2") and empty nodes ("1.1")
/// are skipped; HEAD/DEPREL and later columns are ignored.
/// Throws ParseError (with line number) on malformed lines or empty input.
Treebank parse_conllu(std::string_view text, std::string id, std::string language_code,
                      const ParseOptions& options = {});

/// Parses a FEATS column ("Key=Val|Key=Val" or "_"). Throws ParseError with line 0.
std::vector<Feature> parse_feats(std::string_view column);

/// Canonical "Key=Value|Key=Value" form of a sorted feature list.
std::string feats_to_string(const std::vector<Feature>& feats);

struct ManifestEntry {
  std::string id;
  std::string language_code;
  std::filesystem::path path;
};

/// Reads a TSV manifest (id, language_code, path). Blank lines and lines starting
/// with '#' are ignored, as is a header row starting with "id". Relative paths
/// resolve against base_dir.
std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::filesystem::path& base_dir);

std::string read_file(const std::filesystem::path& path);

}  // namespace morphcx
