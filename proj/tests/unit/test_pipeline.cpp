#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "morphcx/error.hpp"
#include "morphcx/pipeline.hpp"
#include "morphcx/wals.hpp"
#include "synthetic.hpp"

using namespace morphcx;
namespace fs = std::filesystem;

namespace {

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("morphcx_pipeline_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& content) { write_file(dir_ / name, content); }

  RunConfig small_config() {
    RunConfig c;
    c.manifest = dir_ / "manifest.tsv";
    c.out_dir = dir_ / "out";
    c.sampling = {300, 4, 17};
    c.ia_search.draws = 2;
    return c;
  }

  fs::path dir_;
};

std::string featureless_conllu() {
  synth::Sentences s;
  std::uint64_t st = 1;
  for (int i = 0; i < 50; ++i) {
    auto& row = s.emplace_back();
    for (int k = 0; k < 8; ++k) row.push_back({synth::random_word(st, 3), "_"});
  }
  return synth::to_conllu(s);
}

}  // namespace

TEST_F(PipelineTest, TwoTreebankShape) {
  write("a.conllu", synth::to_conllu(synth::inflecting_text(1, 12)));
  write("b.conllu", synth::to_conllu(synth::inflecting_text(2, 3)));
  write("manifest.tsv", "id\tlanguage_code\tpath\nxa_one\txa\ta.conllu\nxb_two\txb\tb.conllu\n");
  std::ostringstream log;
  ASSERT_EQ(cmd_measure(small_config(), log), kExitOk) << log.str();

  const auto matrix = read_tsv(dir_ / "out" / output::kMeasureMatrix);
  ASSERT_EQ(matrix.rows.size(), 2u);
  EXPECT_EQ(matrix.header.size(), 12u);
  for (const auto& row : matrix.rows) {
    EXPECT_EQ(row[2], "ok");
    for (std::size_t c = 4; c < row.size(); ++c) EXPECT_NE(row[c], "NA") << matrix.header[c];
  }
  ASSERT_FALSE(matrix.metadata.empty());
  EXPECT_NE(matrix.metadata[0].find("seed=17"), std::string::npos);

  const auto longt = read_tsv(dir_ / "out" / output::kMeasures);
  EXPECT_EQ(longt.rows.size(), 16u);
  EXPECT_EQ(longt.header, (std::vector<std::string>{"treebank", "measure", "mean", "stddev", "n_repetitions", "available"}));
  EXPECT_NE(longt.metadata[0].find("seed=17"), std::string::npos);

  const auto j = nlohmann::json::parse(read_file(dir_ / "out" / output::kIaSidecar));
  EXPECT_EQ(j["seed"], 17);
  EXPECT_EQ(j["treebanks"]["xa_one"]["status"], "ok");
  EXPECT_EQ(j["treebanks"]["xa_one"]["fold_accuracy"].size(), 3u);

  // richer paradigm: more types, higher MSP
  const auto c_msp = matrix.require_column("msp");
  EXPECT_GT(*parse_cell(matrix.rows[0][c_msp]), *parse_cell(matrix.rows[1][c_msp]));
}

TEST_F(PipelineTest, PartialFailureIsolated) {
  write("a.conllu", synth::to_conllu(synth::inflecting_text(1, 6)));
  write("bad.conllu", "1\tonly three\tcolumns\n");
  write("manifest.tsv", "good\txa\ta.conllu\nbroken\txb\tbad.conllu\nabsent\txc\tnope.conllu\n");
  std::ostringstream log;
  EXPECT_EQ(cmd_measure(small_config(), log), kExitPartial);
  const auto tbs = read_tsv(dir_ / "out" / output::kTreebanks);
  ASSERT_EQ(tbs.rows.size(), 3u);
  EXPECT_EQ(tbs.rows[0][2], "ok");
  EXPECT_EQ(tbs.rows[1][2], "failed");
  EXPECT_NE(tbs.rows[1].back().find("line 1"), std::string::npos);
  EXPECT_EQ(tbs.rows[2][2], "failed");
  const auto matrix = read_tsv(dir_ / "out" / output::kMeasureMatrix);
  EXPECT_EQ(matrix.rows[1][4], "NA");
  EXPECT_NE(log.str().find("FAILED broken"), std::string::npos);
}

TEST_F(PipelineTest, FeaturelessTreebankHasNaForAnnotationMeasures) {
  Treebank tb = parse_conllu(featureless_conllu(), "xx_plain", "xx");
  const auto out = measure_treebank(tb, small_config());
  EXPECT_TRUE(out.ok);
  EXPECT_TRUE(out.no_morph_features());
  EXPECT_FALSE(out.value(Measure::NegIA));
  EXPECT_FALSE(out.value(Measure::MSP));
  EXPECT_FALSE(out.value(Measure::MFH));
  EXPECT_TRUE(out.value(Measure::TTR));
  EXPECT_TRUE(out.value(Measure::WS));
  const auto json = nlohmann::json::parse(ia_sidecar_json({out}, small_config()));
  EXPECT_EQ(json["treebanks"]["xx_plain"]["status"], "unavailable");
}

TEST_F(PipelineTest, ScriptExclusionSkipsWsOnly) {
  Treebank tb = synth::treebank(synth::inflecting_text(3, 4), "zh_test", "zh");
  const auto out = measure_treebank(tb, small_config());
  EXPECT_FALSE(out.value(Measure::WS));
  EXPECT_TRUE(out.value(Measure::TTR));
  EXPECT_TRUE(out.value(Measure::NegIA));
  const auto row = measure_matrix_table({out}, small_config()).rows[0];
  EXPECT_EQ(row[3], "non-alphabetic-script");
}

TEST_F(PipelineTest, AnalysisRowsDropFailedAndFeatureless) {
  const auto t = parse_tsv(
      "treebank\tlanguage\tstatus\texclusion\tttr\twh\n"
      "a\tfi\tok\t-\t0.5\t9\n"
      "b\tko\tok\tno-morph-features\t0.4\t8\n"
      "c\tzh\tok\tnon-alphabetic-script\t0.3\tNA\n"
      "d\tde\tfailed\t-\tNA\tNA\n");
  const auto m = read_measure_matrix(t, true);
  EXPECT_EQ(m.row_ids, (std::vector<std::string>{"a", "c"}));
  EXPECT_FALSE(m.cells[1][1]);
  EXPECT_EQ(read_measure_matrix(t, false).n_rows(), 4u);
}

TEST_F(PipelineTest, AnalyzeProducesCorrelationsPcaAndRidge) {
  // twelve fake treebanks; ttr, wh and msp all track one latent complexity value
  std::string wals = "language_code,1A,2A\n";
  std::string tsv = "treebank\tlanguage\tstatus\texclusion\tttr\twh\tmsp\n";
  for (int i = 0; i < 12; ++i) {
    const double z = i / 11.0;
    const auto lang = "l" + std::to_string(i);
    tsv += lang + "_tb\t" + lang + "\tok\t-\t" + std::to_string(0.2 + 0.3 * z + 0.01 * (i % 3)) + '\t' +
           std::to_string(8 + 3 * z) + '\t' + std::to_string(1.2 + z * z) + '\n';
    wals += lang + ',' + (i < 6 ? "low" : "high") + ',' + std::to_string(i % 2) + '\n';
  }
  write("wals.csv", wals);
  auto cfg = small_config();
  cfg.wals_csv = dir_ / "wals.csv";
  write("features.txt", "1A\n2A\n");
  cfg.wals_features = dir_ / "features.txt";
  std::ostringstream log;
  const auto res = analyze(read_measure_matrix(parse_tsv(tsv), true), cfg, log);
  ASSERT_TRUE(res.pca) << res.pca_error;
  EXPECT_GT(res.pca->explained_ratio(0), 0.9);
  EXPECT_GT(*res.pearson.cells[0][1].value, 0.95);
  // PC1 oriented so that TTR loads positively
  EXPECT_GT(res.pca->loadings(0, 0), 0.0);
  ASSERT_EQ(res.ridge.size(), 6u);  // three measures, three components
  for (const auto& t : res.ridge) EXPECT_TRUE(t.report) << t.name << ": " << t.error;
  EXPECT_EQ(res.ridge[0].report->n, 12u);
}

TEST_F(PipelineTest, PerLanguageRowsAverageTreebanks) {
  std::string tsv = "treebank\tlanguage\tstatus\texclusion\tttr\n";
  std::string wals = "language_code,1A\n";
  for (int i = 0; i < 6; ++i) {
    const auto lang = "l" + std::to_string(i);
    tsv += lang + "_a\t" + lang + "\tok\t-\t" + std::to_string(i) + "\n";
    tsv += lang + "_b\t" + lang + "\tok\t-\t" + std::to_string(i + 0.5) + "\n";
    wals += lang + ',' + std::to_string(i % 3) + '\n';
  }
  write("wals.csv", wals);
  write("features.txt", "1A\n");
  auto cfg = small_config();
  cfg.wals_csv = dir_ / "wals.csv";
  cfg.wals_features = dir_ / "features.txt";
  std::ostringstream log;
  const auto m = read_measure_matrix(parse_tsv(tsv), true);
  EXPECT_EQ(analyze(m, cfg, log).ridge[0].report->n, 12u);
  cfg.wals_rows = WalsRows::PerLanguage;
  EXPECT_EQ(analyze(m, cfg, log).ridge[0].report->n, 6u);
}

TEST_F(PipelineTest, RunAllWritesEveryArtifactAndIsDeterministic) {
  std::string manifest;
  std::string wals = "language_code";
  for (const auto& f : default_wals_features()) wals += "," + f;
  wals += '\n';
  for (int i = 0; i < 6; ++i) {
    const auto name = "t" + std::to_string(i) + ".conllu";
    write(name, synth::to_conllu(synth::inflecting_text(10 + i, 2 + 5 * i)));
    manifest += "tb" + std::to_string(i) + "\tl" + std::to_string(i) + '\t' + name + '\n';
    wals += "l" + std::to_string(i);
    for (std::size_t f = 0; f < default_wals_features().size(); ++f) wals += "," + std::to_string((i + f) % 3);
    wals += '\n';
  }
  write("manifest.tsv", manifest);
  write("wals.csv", wals);
  auto cfg = small_config();
  cfg.wals_csv = dir_ / "wals.csv";
  std::ostringstream log;
  EXPECT_EQ(cmd_run_all(cfg, log), kExitOk) << log.str();
  for (const char* f : {output::kMeasureMatrix, output::kMeasures, output::kTreebanks, output::kIaSidecar,
                        output::kCorrelations, output::kPcaVariance, output::kPcaLoadings, output::kPcaScores,
                        output::kRidge, output::kMeasuresSvg, output::kPcaScatterSvg, output::kPcaComponentsSvg,
                        output::kWalsSvg}) {
    EXPECT_TRUE(fs::exists(cfg.out_dir / f)) << f;
  }
  const auto svg = read_file(cfg.out_dir / output::kMeasuresSvg);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("tb5"), std::string::npos);

  auto cfg2 = cfg;
  cfg2.jobs = 4;
  cfg2.out_dir = dir_ / "out2";
  EXPECT_EQ(cmd_run_all(cfg2, log), kExitOk);
  for (const char* f : {output::kMeasureMatrix, output::kMeasures, output::kIaSidecar, output::kCorrelations,
                        output::kPcaScores, output::kRidge}) {
    EXPECT_EQ(read_file(cfg.out_dir / f), read_file(cfg2.out_dir / f)) << f;
  }
}

TEST_F(PipelineTest, AnalyzeWithoutMeasureTableFails) {
  std::ostringstream log;
  EXPECT_THROW(cmd_analyze(small_config(), log), Error);
}
