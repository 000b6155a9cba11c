#include <gtest/gtest.h>

#include <filesystem>

#include "morphcx/conllu.hpp"
#include "morphcx/error.hpp"
#include "synthetic.hpp"

using namespace morphcx;

namespace {

const char* kSample =
    "# sent_id = 1\n"
    "# text = Vámonos al mar.\n"
    "1-2\tVámonos\t_\t_\t_\t_\t_\t_\t_\t_\n"
    "1\tVamos\tir\tVERB\t_\tMood=Imp|Number=Plur|Person=1\t0\troot\t_\t_\n"
    "2\tnos\tnosotros\tPRON\t_\tCase=Acc|Number=Plur|Person=1\t1\tobj\t_\t_\n"
    "3-4\tal\t_\t_\t_\t_\t_\t_\t_\t_\n"
    "3\ta\ta\tADP\t_\t_\t5\tcase\t_\t_\n"
    "4\tel\tel\tDET\t_\tDefinite=Def|Gender=Masc\t5\tdet\t_\t_\n"
    "4.1\tvoy\tir\tVERB\t_\t_\t_\t_\t1:conj\t_\n"
    "5\tmar\tmar\tNOUN\t_\tGender=Masc|Number=Sing\t1\tobl\t_\t_\n"
    "6\t.\t.\tPUNCT\t_\t_\t1\tpunct\t_\t_\n"
    "\n"
    "1\tSí\t_\tINTJ\t_\t_\t0\troot\t_\t_\n"
    "\n";

}  // namespace

TEST(Conllu, SkipsRangesAndEmptyNodes) {
  const auto tb = parse_conllu(kSample, "es_test", "es");
  ASSERT_EQ(tb.sentences.size(), 2u);
  EXPECT_EQ(tb.sentences[0].tokens.size(), 6u);
  EXPECT_EQ(tb.n_tokens, 7u);
  EXPECT_EQ(tb.sentences[0].tokens[0].form, "Vamos");
  EXPECT_EQ(tb.sentences[0].tokens[3].form, "el");
}

TEST(Conllu, UnderscoreMeansUnannotated) {
  const auto tb = parse_conllu(kSample, "es_test", "es");
  const auto& si = tb.sentences[1].tokens[0];
  EXPECT_FALSE(si.has_lemma());
  EXPECT_FALSE(si.has_feats());
  EXPECT_EQ(si.upos, "INTJ");
}

TEST(Conllu, CountsDistinctFeatureKeys) {
  const auto tb = parse_conllu(kSample, "es_test", "es");
  // Mood Number Person Case Definite Gender
  EXPECT_EQ(tb.n_feature_keys, 6u);
}

TEST(Conllu, LowercaseOption) {
  const auto tb = parse_conllu(kSample, "es_test", "es", {.lowercase = true});
  EXPECT_EQ(tb.sentences[0].tokens[0].form, "vamos");
  EXPECT_EQ(tb.sentences[1].tokens[0].form, "sí");
}

TEST(Conllu, HandlesCrlfAndMissingTrailingBlank) {
  const auto tb = parse_conllu("1\ta\ta\tX\t_\t_\t0\troot\t_\t_\r\n2\tb\tb\tX\t_\t_\t1\tdep\t_\t_", "t", "xx");
  ASSERT_EQ(tb.sentences.size(), 1u);
  EXPECT_EQ(tb.sentences[0].tokens[1].form, "b");
}

TEST(Conllu, WrongColumnCountReportsLine) {
  try {
    parse_conllu("# c\n1\ta\ta\n", "t", "xx");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Conllu, BadIdRejected) {
  EXPECT_THROW(parse_conllu("x\ta\ta\tX\t_\t_\t0\troot\t_\t_\n", "t", "xx"), ParseError);
}

TEST(Conllu, EmptyInputRejected) { EXPECT_THROW(parse_conllu("# only comments\n\n", "t", "xx"), ParseError); }

TEST(Feats, SortedByKey) {
  const auto f = parse_feats("Number=Plur|Case=Nom");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].key, "Case");
  EXPECT_EQ(feats_to_string(f), "Case=Nom|Number=Plur");
}

TEST(Feats, ConflictingKeysRejected) { EXPECT_THROW(parse_feats("Case=Nom|Case=Acc"), ParseError); }

TEST(Feats, MalformedItemRejected) {
  EXPECT_THROW(parse_feats("Case"), ParseError);
  EXPECT_THROW(parse_feats("=Nom"), ParseError);
  EXPECT_THROW(parse_feats("Case="), ParseError);
}

TEST(Feats, DuplicateIdenticalPairCollapses) { EXPECT_EQ(parse_feats("Case=Nom|Case=Nom").size(), 1u); }

TEST(Manifest, ResolvesRelativePathsAndSkipsHeader) {
  const auto m = parse_manifest("id\tlanguage_code\tpath\n# note\nfi_tdt\tfi\tfi.conllu\nvi\tvi\t/abs/vi.conllu\n",
                                "/data");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].path, std::filesystem::path("/data/fi.conllu"));
  EXPECT_EQ(m[1].path, std::filesystem::path("/abs/vi.conllu"));
  EXPECT_EQ(m[1].language_code, "vi");
}

TEST(Manifest, ShortRowRejected) { EXPECT_THROW(parse_manifest("a\tb\n", "."), ParseError); }

// generated corpora: the parser sees exactly the tokens written
TEST(ConlluProperty, ParseCountsMatchGenerator) {
  std::uint64_t state = 3;
  for (int trial = 0; trial < 20; ++trial) {
    synth::Sentences s;
    std::size_t total = 0;
    const auto n = 1 + trial * 3;
    for (int i = 0; i < n; ++i) {
      auto& row = s.emplace_back();
      const auto len = 1 + (state++ * 7) % 13;
      for (std::size_t k = 0; k < len; ++k) {
        const auto w = synth::random_word(state, 4);
        row.push_back({w, w, k % 2 ? "Case=Nom" : "_"});
      }
      total += len;
    }
    const auto tb = synth::treebank(s);
    EXPECT_EQ(tb.sentences.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(tb.n_tokens, total);
    for (std::size_t i = 0; i < s.size(); ++i) {
      ASSERT_EQ(tb.sentences[i].tokens.size(), s[i].size());
      for (std::size_t k = 0; k < s[i].size(); ++k) EXPECT_EQ(tb.sentences[i].tokens[k].form, s[i][k].form);
    }
  }
}
