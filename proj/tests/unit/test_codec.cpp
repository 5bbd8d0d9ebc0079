#include <gtest/gtest.h>

#include <random>

#include "pvdsteg/bitstream.hpp"
#include "pvdsteg/range_table.hpp"
#include "reference_oracle.hpp"

using namespace pvdsteg;

TEST(RangeTable, StandardWidths) {
  const auto& t = RangeTable::standard();
  ASSERT_EQ(t.ranges().size(), 6u);
  const std::vector<Range> expected = {{0, 7, 3},    {8, 15, 3},   {16, 31, 4},
                                       {32, 63, 5},  {64, 127, 6}, {128, 255, 7}};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(t.ranges()[i], expected[i]) << i;
  EXPECT_EQ(t.to_string(), "8,8,16,32,64,128");
}

TEST(RangeTable, SingleRange) {
  const int widths[] = {256};
  const auto t = RangeTable::from_widths(widths);
  ASSERT_EQ(t.ranges().size(), 1u);
  EXPECT_EQ(t.ranges()[0], (Range{0, 255, 8}));
}

TEST(RangeTable, RejectsBadWidths) {
  EXPECT_THROW(RangeTable::parse("8,8"), RangeTableError);
  EXPECT_THROW(RangeTable::parse("8,8,16,32,64,100,28"), RangeTableError);
  EXPECT_THROW(RangeTable::parse("1,255"), RangeTableError);
  EXPECT_THROW(RangeTable::parse("256,8"), RangeTableError);
  EXPECT_THROW(RangeTable::parse(""), RangeTableError);
  EXPECT_THROW(RangeTable::parse("8,,8"), RangeTableError);
  EXPECT_THROW(RangeTable::parse("8,8,16,32,64,128x"), RangeTableError);
  EXPECT_NO_THROW(RangeTable::parse(" 128, 128 "));
}

TEST(RangeTable, LocateExamples) {
  const auto& t = RangeTable::standard();
  EXPECT_EQ(t.locate(1), (Range{0, 7, 3}));
  EXPECT_EQ(t.locate(0), (Range{0, 7, 3}));
  EXPECT_EQ(t.locate(255), (Range{128, 255, 7}));
  EXPECT_THROW(t.locate(256), std::out_of_range);
  EXPECT_THROW(t.locate(-1), std::out_of_range);
}

TEST(RangeTable, LocateMatchesArgminFormulation) {
  for (const char* widths : {"8,8,16,32,64,128", "2,2,4,8,16,32,64,128", "128,128", "256", "64,64,64,32,16,8,8"}) {
    const auto t = RangeTable::parse(widths);
    std::vector<int> w;
    for (const auto& r : t.ranges()) w.push_back(r.width());
    const auto ref = oracle::ref_table(w);
    for (int d = 0; d <= 255; ++d) {
      const auto& got = t.locate(d);
      const auto want = oracle::ref_locate(ref, d);
      ASSERT_TRUE(got.contains(d));
      ASSERT_EQ(got.lower, want.lower) << widths << " d=" << d;
      ASSERT_EQ(got.upper, want.upper);
      ASSERT_EQ(got.bits, want.bits);
      ASSERT_EQ(1 << got.bits, got.width());
    }
  }
}

TEST(BitReader, ReadsMsbFirst) {
  const BitString bits = {0, 1, 0, 1, 1, 1, 0, 0, 0};
  BitReader r(bits);
  EXPECT_EQ(r.read_chunk(3), (Chunk{2, 3}));
  EXPECT_EQ(r.read_chunk(3), (Chunk{7, 3}));
  EXPECT_EQ(r.read_chunk(3), (Chunk{0, 3}));
  EXPECT_TRUE(r.exhausted());
  EXPECT_THROW(r.read_chunk(1), PayloadError);
}

TEST(BitReader, PadsTailThenStops) {
  const BitString bits = {1, 1};
  BitReader r(bits);
  EXPECT_EQ(r.read_padded(3), (Chunk{6, 3}));
  EXPECT_EQ(r.position(), 2u);
  EXPECT_EQ(r.read_padded(3), std::nullopt);
}

TEST(Chunk, FromString) {
  EXPECT_EQ(chunk_from_string("010"), (Chunk{2, 3}));
  EXPECT_EQ(chunk_from_string("111").msb(), 1u);
  EXPECT_EQ(chunk_from_string("011").msb(), 0u);
  EXPECT_THROW(chunk_from_string("012"), std::invalid_argument);
}

TEST(Framing, EmptyMessage) {
  const auto bits = frame_payload({});
  EXPECT_EQ(bits, BitString(32, 0));
  EXPECT_TRUE(deframe_payload(bits).empty());
}

TEST(Framing, SingleByte) {
  const std::vector<std::uint8_t> msg = {0xFF};
  const auto bits = frame_payload(msg);
  ASSERT_EQ(bits.size(), 40u);
  EXPECT_EQ(read_header(bits), 8u);
  for (std::size_t i = 32; i < 40; ++i) EXPECT_EQ(bits[i], 1);
  EXPECT_EQ(deframe_payload(bits), msg);
}

TEST(Framing, IgnoresTrailingPadding) {
  const std::vector<std::uint8_t> msg = {0xA5, 0x01};
  auto bits = frame_payload(msg);
  bits.insert(bits.end(), 5, 0);
  EXPECT_EQ(deframe_payload(bits), msg);
}

TEST(Framing, TruncatedPayload) {
  auto bits = frame_payload(std::vector<std::uint8_t>{1, 2, 3});
  bits.resize(bits.size() - 1);
  EXPECT_THROW(deframe_payload(bits), PayloadError);
  EXPECT_THROW(deframe_payload(BitString(31, 0)), PayloadError);
}

TEST(Framing, RoundTripProperty) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint8_t> msg(rng() % 4097);
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
    const auto bits = frame_payload(msg);
    ASSERT_EQ(bits.size(), 32 + msg.size() * 8);
    ASSERT_EQ(deframe_payload(bits), msg);
  }
}
