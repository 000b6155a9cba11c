#pragma once

// Synthetic corpora with known structure for tests and benchmarks.

#include <cstdint>
#include <string>
#include <vector>

#include "morphcx/conllu.hpp"
#include "morphcx/inflection.hpp"

namespace synth {

struct Word {
  std::string form;
  std::string lemma;
  std::string feats = "_";
};

using Sentences = std::vector<std::vector<Word>>;

/// CoNLL-U text for the sentences (UPOS "X", dependency columns filled with placeholders).
std::string to_conllu(const Sentences& sentences);

morphcx::Treebank treebank(const Sentences& sentences, std::string id = "syn", std::string lang = "xx");

/// Random lowercase string over the first `alphabet` letters.
std::string random_word(std::uint64_t& state, std::size_t length, std::size_t alphabet = 20);

/// A matched pair of corpora over one token sequence: the agglutinative one
/// spells type i as stem[i / suffixes] + suffix[i % suffixes]; the isolating one
/// spells it as an unrelated random string of the same length.
struct MatchedCorpora {
  morphcx::Treebank agglutinative;
  morphcx::Treebank isolating;
};

MatchedCorpora matched_corpora(std::uint64_t seed, std::size_t stems = 20, std::size_t suffixes = 20,
                               std::size_t sentences = 400, std::size_t sentence_length = 12);

/// Corpus whose word types are all one character long.
morphcx::Treebank single_char_corpus(std::uint64_t seed, std::size_t sentences = 400, std::size_t sentence_length = 12);

/// Running text in an inflecting language: each token is a lemma plus the
/// suffix of one of `cells` paradigm cells, annotated with Case/Number/Person.
Sentences inflecting_text(std::uint64_t seed, std::size_t cells, std::size_t sentences = 200,
                          std::size_t sentence_length = 10, std::size_t lemmas = 150);

/// Fully regular toy morphology: every lemma has Number=Sing (bare), Number=Plur
/// (+s) and Tense=Past (+ed).
std::vector<morphcx::InflectionInstance> regular_language(std::size_t lemmas, std::uint64_t seed);

/// Every form is an unrelated random string, all distinct.
std::vector<morphcx::InflectionInstance> suppletive_language(std::size_t lemmas, std::uint64_t seed);

}  // namespace synth
