#include <gtest/gtest.h>

#include <algorithm>

#include "morphcx/error.hpp"
#include "morphcx/measures.hpp"
#include "synthetic.hpp"

using namespace morphcx;

namespace {

// one sentence per call; words are "form/lemma/feats"
Treebank make(const std::vector<synth::Word>& words) { return synth::treebank({words}); }

double value(const MeasureValue& v) {
  EXPECT_TRUE(v.has_value());
  return v.value_or(-1.0);
}

}  // namespace

TEST(Ttr, Examples) {
  EXPECT_DOUBLE_EQ(ttr(Sample::whole(make({{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}}))), 1.0);
  EXPECT_DOUBLE_EQ(ttr(Sample::whole(make({{"x", "x"}, {"x", "x"}, {"x", "x"}, {"x", "x"}}))), 0.25);
  EXPECT_DOUBLE_EQ(ttr(Sample::whole(make({{"a", "a"}, {"b", "b"}, {"a", "a"}, {"c", "c"}}))), 0.75);
}

TEST(Ttr, EmptySampleRejected) { EXPECT_THROW(ttr(Sample{}), Error); }

TEST(WordEntropy, UsesForms) {
  EXPECT_DOUBLE_EQ(word_entropy(Sample::whole(make({{"a", "z"}, {"b", "z"}}))), 1.0);
}

TEST(LemmaEntropy, UnavailableWithoutLemmas) {
  EXPECT_FALSE(lemma_entropy(Sample::whole(make({{"a", "_"}, {"b", "_"}}))).has_value());
  EXPECT_DOUBLE_EQ(value(lemma_entropy(Sample::whole(make({{"a", "z"}, {"b", "z"}})))), 0.0);
}

TEST(Msp, Examples) {
  EXPECT_DOUBLE_EQ(value(msp(Sample::whole(make({{"walk", "walk"}, {"walks", "walk"}, {"walked", "walk"}})))), 3.0);
  EXPECT_DOUBLE_EQ(value(msp(Sample::whole(make({{"a", "a"}, {"b", "b"}})))), 1.0);
  EXPECT_DOUBLE_EQ(value(msp(Sample::whole(make({{"a", "x"}, {"b", "x"}, {"c", "y"}, {"d", "y"}})))), 2.0);
  EXPECT_FALSE(msp(Sample::whole(make({{"a", "_"}}))).has_value());
}

TEST(InflectionalSynthesis, UnionPerLemmaThenMax) {
  const auto tb = make({{"olen", "olla", "Mood=Ind|Number=Sing|Person=1"},
                        {"oli", "olla", "Tense=Past|Voice=Act"},
                        {"talo", "talo", "Case=Nom"}});
  EXPECT_DOUBLE_EQ(value(inflectional_synthesis(Sample::whole(tb))), 5.0);
}

TEST(InflectionalSynthesis, Singleton) {
  const auto tb = make({{"a", "a"}, {"b", "b"}, {"c", "c", "Number=Sing"}});
  EXPECT_DOUBLE_EQ(value(inflectional_synthesis(Sample::whole(tb))), 1.0);
}

TEST(InflectionalSynthesis, PairVariantCountsValues) {
  const auto tb = make({{"a", "x", "Number=Sing"}, {"as", "x", "Number=Plur"}});
  EXPECT_DOUBLE_EQ(value(inflectional_synthesis(Sample::whole(tb))), 1.0);
  EXPECT_DOUBLE_EQ(value(inflectional_synthesis(Sample::whole(tb), SynthesisUnit::FeaturePairs)), 2.0);
}

TEST(InflectionalSynthesis, UnavailableWithoutFeatures) {
  EXPECT_FALSE(inflectional_synthesis(Sample::whole(make({{"a", "a"}}))).has_value());
}

TEST(FeatureEntropy, Examples) {
  EXPECT_DOUBLE_EQ(value(feature_entropy(Sample::whole(make({{"a", "a", "Case=Nom"}, {"b", "b", "Case=Nom"}})))),
                   0.0);
  EXPECT_DOUBLE_EQ(value(feature_entropy(Sample::whole(
                       make({{"a", "a", "Case=Nom|Num=Sg"}, {"b", "b", "Case=Gen|Num=Pl"}})))),
                   2.0);
  EXPECT_NEAR(value(feature_entropy(Sample::whole(make({{"a", "a", "Case=Nom"},
                                                         {"b", "b", "Case=Nom"},
                                                         {"c", "c", "Case=Nom"},
                                                         {"d", "d", "Case=Gen"}})))),
              0.8112781244591328, 1e-12);
  EXPECT_FALSE(feature_entropy(Sample::whole(make({{"a", "a"}}))).has_value());
}

TEST(Ws, IdenticalTextsGiveZero) {
  const TokenText t = {{"ab", "cd"}, {"ef"}};
  EXPECT_EQ(ws_from_texts(t, t), 0.0);
}

TEST(Ws, SingleCharacterTypesCarryNoStructure) {
  const auto tb = synth::single_char_corpus(3);
  Rng rng(1);
  EXPECT_LT(std::abs(word_structure_information(Sample::whole(tb), rng)), 0.02);
}

TEST(Ws, AgglutinativeAboveIsolating) {
  const auto c = synth::matched_corpora(42);
  Rng a(1), b(1);
  EXPECT_GT(word_structure_information(Sample::whole(c.agglutinative), a),
            word_structure_information(Sample::whole(c.isolating), b));
}

TEST(SampleMeasures, NamesFollowSelection) {
  const auto ms = sample_measures({Measure::WH, Measure::TTR, Measure::NegIA});
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].name, "wh");
  EXPECT_EQ(ms[1].name, "ttr");
}

TEST(SampleMeasures, PureGivenSampleAndStream) {
  const auto c = synth::matched_corpora(5, 5, 5, 50, 8);
  const auto s = Sample::whole(c.agglutinative);
  for (const auto& m : sample_measures({kAllMeasures.begin(), kAllMeasures.end()})) {
    Rng a(9), b(9);
    EXPECT_EQ(m.fn(s, a), m.fn(s, b)) << m.name;
  }
}

// bag-of-token measures ignore sentence order
TEST(MeasuresProperty, SentencePermutationInvariance) {
  synth::Sentences sents;
  std::uint64_t st = 12;
  const char* feats[] = {"Case=Nom", "Case=Gen|Number=Plur", "_", "Tense=Past|Person=3|Number=Sing"};
  for (int i = 0; i < 60; ++i) {
    auto& row = sents.emplace_back();
    for (int k = 0; k < 7; ++k) {
      const auto lemma = synth::random_word(st, 2, 4);
      row.push_back({lemma + synth::random_word(st, 1, 3), lemma, feats[(i + k) % 4]});
    }
  }
  const auto tb = synth::treebank(sents);
  const auto base = Sample::whole(tb);
  const auto bag = sample_measures({Measure::TTR, Measure::MSP, Measure::WH, Measure::LH, Measure::IS, Measure::MFH});
  Rng perm(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto shuffled = base;
    perm.shuffle(shuffled.sentences);
    for (const auto& m : bag) {
      Rng a(1), b(1);
      const auto x = m.fn(base, a);
      const auto y = m.fn(shuffled, b);
      ASSERT_TRUE(x && y) << m.name;
      EXPECT_NEAR(*x, *y, 1e-12) << m.name;
    }
  }
}

TEST(MeasuresProperty, RangeInvariants) {
  const auto c = synth::matched_corpora(8, 6, 6, 80, 9);
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = bootstrap_sample(c.agglutinative, 100 + trial * 10, rng);
    const double t = ttr(s);
    EXPECT_GT(t, 0.0);
    EXPECT_LE(t, 1.0);
    EXPECT_GE(*msp(s), 1.0);
  }
}
