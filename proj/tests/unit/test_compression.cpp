#include <gtest/gtest.h>

#include <zlib.h>

#include "morphcx/compression.hpp"
#include "morphcx/error.hpp"
#include "morphcx/rng.hpp"

using namespace morphcx;

TEST(Compression, RepetitiveTextCompressesBetterThanRandom) {
  std::string rep, rnd;
  Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    rep += "abcd ";
    rnd += static_cast<char>('a' + rng.uniform_index(26));
  }
  EXPECT_LT(compression_ratio(rep), 0.05);
  EXPECT_GT(compression_ratio(rnd), 0.5);
}

TEST(Compression, SizeMatchesIndependentRawDeflate) {
  const std::string data = "the quick brown fox jumps over the lazy dog\nthe lazy dog sleeps";
  // compress2 emits a zlib wrapper: 2 header bytes and a 4 byte adler32 trailer around the same stream
  uLongf n = compressBound(data.size());
  std::vector<Bytef> buf(n);
  ASSERT_EQ(compress2(buf.data(), &n, reinterpret_cast<const Bytef*>(data.data()), data.size(), 9), Z_OK);
  EXPECT_EQ(compressed_size(data), n - 6);
}

TEST(Compression, EmptyRejected) { EXPECT_THROW(compression_ratio(""), Error); }

TEST(Compression, InvalidSettingRejected) {
  CompressorSetting bad;
  bad.level = 42;
  EXPECT_THROW(compressed_size("abc", bad), Error);
  EXPECT_NE(bad.describe().find("level=42"), std::string::npos);
}
