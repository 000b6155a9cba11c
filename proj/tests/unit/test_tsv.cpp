#include <gtest/gtest.h>

#include <filesystem>

#include "morphcx/conllu.hpp"
#include "morphcx/error.hpp"
#include "morphcx/tsv.hpp"

using namespace morphcx;

TEST(Tsv, RoundTripWithMetadata) {
  TsvTable t;
  t.metadata = {"seed=7", "tool=morphcx"};
  t.header = {"id", "value"};
  t.rows = {{"a", "0.5"}, {"b", "NA"}};
  const auto s = t.to_string();
  EXPECT_EQ(s, "# seed=7\n# tool=morphcx\nid\tvalue\na\t0.5\nb\tNA\n");
  const auto back = parse_tsv(s);
  EXPECT_EQ(back.metadata, t.metadata);
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.rows, t.rows);
}

TEST(Tsv, RaggedRowRejected) { EXPECT_THROW(parse_tsv("a\tb\n1\n"), ParseError); }

TEST(Tsv, MissingHeaderRejected) { EXPECT_THROW(parse_tsv("# only\n"), ParseError); }

TEST(Tsv, RequireColumn) {
  const auto t = parse_tsv("x\ty\n");
  EXPECT_EQ(t.require_column("y"), 1u);
  EXPECT_THROW(t.require_column("z"), Error);
}

TEST(Cells, NaAndNumbers) {
  EXPECT_EQ(format_cell(std::nullopt), "NA");
  EXPECT_EQ(format_cell(-0.25), "-0.25");
  EXPECT_FALSE(parse_cell("NA"));
  EXPECT_EQ(parse_cell("1e-3"), 1e-3);
  EXPECT_THROW(parse_cell("1.2x"), ParseError);
  const double v = 0.1 + 0.2;
  EXPECT_EQ(parse_cell(format_cell(v)), v);
}

TEST(Files, WriteCreatesDirectories) {
  const auto dir = std::filesystem::temp_directory_path() / "morphcx_tsv_test";
  std::filesystem::remove_all(dir);
  write_file(dir / "a" / "b.tsv", "h\n1\n");
  EXPECT_EQ(read_tsv(dir / "a" / "b.tsv").rows.size(), 1u);
  EXPECT_THROW(read_tsv(dir / "missing.tsv"), Error);
  std::filesystem::remove_all(dir);
}
