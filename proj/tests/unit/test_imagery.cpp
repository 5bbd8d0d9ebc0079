#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "pvdsteg/image.hpp"
#include "pvdsteg/pgm.hpp"
#include "pvdsteg/synthetic.hpp"

using namespace pvdsteg;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

pgm::ParseErrc parse_error_of(const std::string& text) {
  try {
    pgm::load(bytes_of(text));
  } catch (const pgm::ParseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a parse error for: " << text;
  return pgm::ParseErrc::bad_magic;
}

}  // namespace

TEST(GrayImage, RejectsBadShapes) {
  EXPECT_THROW(GrayImage(0, 3, std::vector<std::uint8_t>{}), std::invalid_argument);
  EXPECT_THROW(GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3}), std::invalid_argument);
}

TEST(Pgm, LoadsMinimalBinary) {
  auto data = bytes_of("P5\n2 1\n255\n");
  data.push_back(0);
  data.push_back(255);
  const auto img = pgm::load(data);
  EXPECT_EQ(img.width(), 2u);
  EXPECT_EQ(img.height(), 1u);
  EXPECT_EQ(img[0], 0);
  EXPECT_EQ(img[1], 255);
}

TEST(Pgm, LoadsSinglePixelAscii) {
  const auto img = pgm::load(bytes_of("P2 1 1 255 128"));
  EXPECT_EQ(img.size(), 1u);
  EXPECT_EQ(img[0], 128);
}

TEST(Pgm, AcceptsComments) {
  const auto img = pgm::load(bytes_of("P2\n# made by hand\n2 # width\n1\n255\n# data\n7 9\n"));
  EXPECT_EQ(img[0], 7);
  EXPECT_EQ(img[1], 9);
}

TEST(Pgm, BinaryPixelsMayLookLikeWhitespace) {
  auto data = bytes_of("P5 2 1 255\n");
  data.push_back('\n');
  data.push_back(' ');
  const auto img = pgm::load(data);
  EXPECT_EQ(img[0], '\n');
  EXPECT_EQ(img[1], ' ');
}

TEST(Pgm, DistinctParseErrors) {
  EXPECT_EQ(parse_error_of("P6\n1 1\n255\n\x01"), pgm::ParseErrc::bad_magic);
  EXPECT_EQ(parse_error_of("P5x 1 1 255\n\x01"), pgm::ParseErrc::bad_magic);
  EXPECT_EQ(parse_error_of(""), pgm::ParseErrc::bad_magic);
  EXPECT_EQ(parse_error_of("P5\n1 \n"), pgm::ParseErrc::bad_header);
  EXPECT_EQ(parse_error_of("P2 a 1 255 0"), pgm::ParseErrc::bad_header);
  EXPECT_EQ(parse_error_of("P5\n1 1\n65535\n\x01\x02"), pgm::ParseErrc::unsupported_maxval);
  EXPECT_EQ(parse_error_of("P2 1 1 15 3"), pgm::ParseErrc::unsupported_maxval);
  EXPECT_EQ(parse_error_of("P5\n0 4\n255\n"), pgm::ParseErrc::zero_dimension);
  EXPECT_EQ(parse_error_of("P5\n2 2\n255\n\x01\x02"), pgm::ParseErrc::truncated);
  EXPECT_EQ(parse_error_of("P5\n2 2\n255"), pgm::ParseErrc::truncated);
  EXPECT_EQ(parse_error_of("P2 2 1 255 4"), pgm::ParseErrc::truncated);
  EXPECT_EQ(parse_error_of("P2 2 1 255 4 256"), pgm::ParseErrc::bad_pixel_value);
}

TEST(Pgm, MaxvalMessage) {
  try {
    pgm::load(bytes_of("P5\n1 1\n65535\n\x01\x02"));
    FAIL();
  } catch (const pgm::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported maxval"), std::string::npos);
  }
}

TEST(Pgm, SavesBinaryExactly) {
  const auto out = pgm::save(GrayImage(1, 1, std::vector<std::uint8_t>{0}), pgm::Variant::binary);
  auto expected = bytes_of("P5\n1 1\n255\n");
  expected.push_back(0);
  EXPECT_EQ(out, expected);
}

TEST(Pgm, SavesAscii) {
  const GrayImage img(2, 2, std::vector<std::uint8_t>{1, 2, 3, 4});
  const auto out = pgm::save(img, pgm::Variant::ascii);
  EXPECT_EQ(std::string(out.begin(), out.end()), "P2\n2 2\n255\n1 2 3 4\n");
  EXPECT_EQ(pgm::load(out), img);
}

TEST(Pgm, AsciiLinesStayShort) {
  const auto out = pgm::save(GrayImage(40, 3, 255), pgm::Variant::ascii);
  std::size_t line = 0;
  for (auto c : out) {
    line = c == '\n' ? 0 : line + 1;
    ASSERT_LE(line, 70u);
  }
}

TEST(Pgm, RoundTripFuzz) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t w = 1 + rng() % 37, h = 1 + rng() % 23;
    const auto img = synthetic::noise(w, h, rng());
    for (auto v : {pgm::Variant::ascii, pgm::Variant::binary}) ASSERT_EQ(pgm::load(pgm::save(img, v)), img);
  }
  const auto big = synthetic::noise(512, 512, 99);
  EXPECT_EQ(pgm::load(pgm::save(big, pgm::Variant::binary)), big);
  EXPECT_EQ(pgm::load(pgm::save(big, pgm::Variant::ascii)), big);
}

TEST(BlockSequence, PairsInRowMajorOrder) {
  const GrayImage img(2, 2, std::vector<std::uint8_t>{10, 20, 30, 40});
  const auto blocks = block_sequence(img);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0].pixels, (PixelPair{10, 20}));
  EXPECT_EQ(blocks[1].pixels, (PixelPair{30, 40}));
}

TEST(BlockSequence, OddCountLeavesLastPixel) {
  const GrayImage img(3, 1, std::vector<std::uint8_t>{1, 2, 3});
  const auto blocks = block_sequence(img);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].pixels, (PixelPair{1, 2}));
}

TEST(BlockSequence, CountFor512) { EXPECT_EQ(block_sequence(GrayImage(512, 512)).size(), 131072u); }

TEST(BlockSequence, CoversEveryPixelOnce) {
  for (std::size_t w = 1; w <= 9; ++w) {
    for (std::size_t h = 1; h <= 9; ++h) {
      const auto blocks = block_sequence(GrayImage(w, h));
      std::set<std::size_t> seen;
      for (const auto& b : blocks) {
        ASSERT_TRUE(seen.insert(b.index.first()).second);
        ASSERT_TRUE(seen.insert(b.index.second()).second);
        ASSERT_LT(b.index.second(), w * h);
      }
      EXPECT_GE(seen.size() + 1, w * h);
    }
  }
}

TEST(WideImage, ClampsAndCounts) {
  WideImage wide(GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3, 4}));
  wide[0] = -5;
  wide[3] = 300;
  EXPECT_EQ(wide.out_of_range_count(), 2u);
  const auto g = wide.clamped();
  EXPECT_EQ(g[0], 0);
  EXPECT_EQ(g[3], 255);
  EXPECT_EQ(g[1], 2);
}
