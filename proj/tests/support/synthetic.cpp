#include "synthetic.hpp"

#include <cmath>
#include <set>

namespace synth {

namespace {

std::uint64_t next(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::string> distinct_words(std::uint64_t& state, std::size_t count, std::size_t min_len,
                                        std::size_t max_len, std::set<std::string>& taken) {
  std::vector<std::string> out;
  while (out.size() < count) {
    const auto len = min_len + next(state) % (max_len - min_len + 1);
    auto w = random_word(state, len);
    if (taken.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::string to_conllu(const Sentences& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    out += "# text = synthetic\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      out += std::to_string(i + 1) + '\t' + s[i].form + '\t' + s[i].lemma + "\tX\t_\t" + s[i].feats + '\t' +
             std::to_string(i) + "\tdep\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

morphcx::Treebank treebank(const Sentences& sentences, std::string id, std::string lang) {
  return morphcx::parse_conllu(to_conllu(sentences), std::move(id), std::move(lang));
}

std::string random_word(std::uint64_t& state, std::size_t length, std::size_t alphabet) {
  std::string w;
  for (std::size_t i = 0; i < length; ++i) w += static_cast<char>('a' + next(state) % alphabet);
  return w;
}

MatchedCorpora matched_corpora(std::uint64_t seed, std::size_t stems, std::size_t suffixes, std::size_t sentences,
                               std::size_t sentence_length) {
  std::uint64_t st = seed * 7919 + 17;
  std::set<std::string> taken;
  const auto stem_strs = distinct_words(st, stems, 3, 6, taken);
  const auto suffix_strs = distinct_words(st, suffixes, 1, 3, taken);

  std::vector<std::string> agg, iso;
  std::set<std::string> iso_taken;
  for (std::size_t i = 0; i < stems * suffixes; ++i) {
    agg.push_back(stem_strs[i / suffixes] + suffix_strs[i % suffixes]);
    std::string w;
    do {
      w = random_word(st, agg.back().size());
    } while (!iso_taken.insert(w).second);
    iso.push_back(std::move(w));
  }

  Sentences sa, si;
  for (std::size_t s = 0; s < sentences; ++s) {
    auto& ra = sa.emplace_back();
    auto& ri = si.emplace_back();
    for (std::size_t k = 0; k < sentence_length; ++k) {
      const auto type = next(st) % agg.size();
      ra.push_back({agg[type], agg[type]});
      ri.push_back({iso[type], iso[type]});
    }
  }
  return {treebank(sa, "agglutinative"), treebank(si, "isolating")};
}

morphcx::Treebank single_char_corpus(std::uint64_t seed, std::size_t sentences, std::size_t sentence_length) {
  std::uint64_t st = seed * 104729 + 3;
  Sentences out;
  for (std::size_t s = 0; s < sentences; ++s) {
    auto& row = out.emplace_back();
    for (std::size_t k = 0; k < sentence_length; ++k) {
      // skewed letter frequencies so the character model is not uniform
      const auto r = next(st) % 100;
      const char c = static_cast<char>('a' + (r < 40 ? 0 : r < 60 ? 1 : r < 75 ? 2 : 3 + r % 9));
      row.push_back({std::string(1, c), std::string(1, c)});
    }
  }
  return treebank(out, "single-char");
}

Sentences inflecting_text(std::uint64_t seed, std::size_t cells, std::size_t sentences, std::size_t sentence_length,
                          std::size_t lemmas) {
  std::uint64_t st = seed * 2654435761ULL + 11;
  std::set<std::string> taken;
  const auto stems = distinct_words(st, lemmas, 3, 6, taken);
  std::vector<std::string> suffixes = {""};
  for (const auto& w : distinct_words(st, cells - 1, 1, 3, taken)) suffixes.push_back(w);
  static const char* kCase[] = {"Nom", "Gen", "Par", "Ess", "Ine", "Ela"};
  static const char* kNumber[] = {"Sing", "Plur"};
  Sentences out;
  for (std::size_t s = 0; s < sentences; ++s) {
    auto& row = out.emplace_back();
    for (std::size_t k = 0; k < sentence_length; ++k) {
      // Zipf-like lemma choice keeps the type/token profile realistic
      const auto r = next(st) % (lemmas * lemmas);
      const auto lemma = stems[lemmas - 1 - static_cast<std::size_t>(std::sqrt(static_cast<double>(r)))];
      const auto c = next(st) % cells;
      const std::string feats = "Case=" + std::string(kCase[c % 6]) + "|Number=" + kNumber[(c / 6) % 2] +
                                "|Person=" + std::to_string(1 + (c / 12) % 3);
      row.push_back({lemma + suffixes[c], lemma, feats});
    }
  }
  return out;
}

std::vector<morphcx::InflectionInstance> regular_language(std::size_t lemmas, std::uint64_t seed) {
  std::uint64_t st = seed * 31337 + 1;
  std::set<std::string> taken;
  std::vector<morphcx::InflectionInstance> out;
  for (const auto& lemma : distinct_words(st, lemmas, 3, 7, taken)) {
    out.push_back({lemma, "Number=Sing", lemma});
    out.push_back({lemma, "Number=Plur", lemma + "s"});
    out.push_back({lemma, "Tense=Past", lemma + "ed"});
  }
  return out;
}

std::vector<morphcx::InflectionInstance> suppletive_language(std::size_t lemmas, std::uint64_t seed) {
  std::uint64_t st = seed * 6151 + 5;
  std::set<std::string> taken;
  std::vector<morphcx::InflectionInstance> out;
  const auto ls = distinct_words(st, lemmas, 4, 6, taken);
  for (const auto& lemma : ls) {
    for (const char* bundle : {"Number=Sing", "Number=Plur", "Tense=Past"}) {
      // letters from the back half of the alphabet, so no overlap with lemmas
      std::string form;
      do {
        form.clear();
        for (int i = 0; i < 5; ++i) form += static_cast<char>('u' + next(st) % 6);
      } while (!taken.insert(form).second);
      out.push_back({lemma, bundle, form});
    }
  }
  return out;
}

}  // namespace synth
