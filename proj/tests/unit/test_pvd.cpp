#include <gtest/gtest.h>

#include <cstdlib>

#include "pvdsteg/pvd.hpp"
#include "pvdsteg/synthetic.hpp"
#include "reference_oracle.hpp"

using namespace pvdsteg;

namespace {

const RangeTable& table() { return RangeTable::standard(); }

PixelPair embed(int p, int q, const char* bits) {
  return pvd::embed_block(p, q, chunk_from_string(bits), table()).stego;
}

}  // namespace

TEST(PvdBlock, WorkedExampleOverflows) { EXPECT_EQ(embed(254, 255, "111"), (PixelPair{251, 258})); }

TEST(PvdBlock, IdentityCase) { EXPECT_EQ(embed(100, 100, "000"), (PixelPair{100, 100})); }

TEST(PvdBlock, DivergingMidRange) {
  // d = 16 lands in [16,31]: 4 bits, b = 6, d' = 22, m = 6.
  const auto ref = oracle::ref_pvd(64, 80, 22);
  ASSERT_EQ(ref, std::make_pair(61, 83));
  EXPECT_EQ(embed(64, 80, "0110"), (PixelPair{61, 83}));
}

TEST(PvdBlock, RejectsWrongChunkWidth) {
  EXPECT_THROW(pvd::embed_block(1, 2, chunk_from_string("1111"), table()), std::invalid_argument);
}

TEST(PvdBlock, CursorStopsWhenExhausted) {
  const BitString none;
  BitReader cursor(none);
  EXPECT_EQ(pvd::embed_block(5, 9, cursor, table()), std::nullopt);
}

TEST(PvdBlock, Extract) {
  EXPECT_EQ(pvd::extract_block({251, 258}, table()), chunk_from_string("111"));
  EXPECT_EQ(pvd::extract_block({100, 100}, table()), chunk_from_string("000"));
  EXPECT_EQ(pvd::extract_block({61, 83}, table()), chunk_from_string("0110"));
}

// Every block and chunk against the independent transcription, plus the
// baseline's structural properties.
TEST(PvdBlock, ExhaustiveAgainstReference) {
  const auto ref_table = oracle::standard_table();
  int lowest = 0, highest = 255;
  for (int p = 0; p < 256; ++p) {
    for (int q = 0; q < 256; ++q) {
      const int d = std::abs(q - p);
      const auto& range = table().locate(d);
      for (unsigned v = 0; v < (1u << range.bits); ++v) {
        const auto out = pvd::embed_block(p, q, {v, range.bits}, table());
        const auto ref = oracle::ref_pvd(p, q, oracle::ref_locate(ref_table, d).lower + static_cast<int>(v));
        ASSERT_EQ(out.stego, (PixelPair{ref.first, ref.second})) << p << "," << q << " v=" << v;
        ASSERT_EQ(std::abs(out.stego.second - out.stego.first), out.new_difference);
        ASSERT_TRUE(range.contains(out.new_difference));
        if (out.new_difference <= d) ASSERT_TRUE(in_gray_range(out.stego)) << p << "," << q;
        if (in_gray_range(out.stego)) ASSERT_EQ(pvd::extract_block(out.stego, table()), (Chunk{v, range.bits}));
        lowest = std::min({lowest, out.stego.first, out.stego.second});
        highest = std::max({highest, out.stego.first, out.stego.second});
      }
    }
  }
  EXPECT_GE(lowest, -64);
  EXPECT_LE(highest, 319);
}

TEST(PvdImage, FlatCoverStaysInRange) {
  const auto cover = synthetic::flat(64, 64, 128);
  const auto payload = synthetic::random_bytes(200, 3);
  const auto result = pvd::embed(cover, payload, table());
  EXPECT_EQ(result.violations, 0u);
  EXPECT_EQ(pvd::extract(result.stego, table()), payload);
  for (int v : result.stego.pixels()) {
    EXPECT_GE(v, 121);
    EXPECT_LE(v, 135);
  }
}

TEST(PvdImage, EmptyPayloadTouchesOnlyHeaderBlocks) {
  const auto cover = synthetic::noise(32, 32, 11);
  const auto result = pvd::embed(cover, {}, table());
  EXPECT_EQ(result.bits_embedded, 32u);
  for (std::size_t i = 2 * result.blocks_used; i < cover.size(); ++i) ASSERT_EQ(result.stego[i], cover[i]);
  EXPECT_TRUE(pvd::extract(result.stego, table()).empty());
}

TEST(PvdImage, WorkedExampleBlockViolates) {
  // Every block carries 3 bits. Block 10 reads header bits 30,31 and payload
  // bit 0; block 11, the (254,255) pair, reads payload bits 1..3 = '111'.
  GrayImage cover(8, 4, 128);
  cover[22] = 254;
  cover[23] = 255;
  const std::vector<std::uint8_t> payload = {0b01110000};
  const auto result = pvd::embed(cover, payload, table());
  EXPECT_EQ(result.stego[22], 251);
  EXPECT_EQ(result.stego[23], 258);
  EXPECT_GE(result.violations, 1u);
  EXPECT_EQ(pvd::extract(result.stego, table()), payload);
}

TEST(PvdImage, RefusesOversizedPayload) {
  const auto cover = synthetic::flat(4, 4, 0);  // 8 blocks * 3 bits = 24 bits
  try {
    pvd::embed(cover, {}, table());
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.required_bits(), 32u);
    EXPECT_EQ(e.available_bits(), 24u);
  }
}

TEST(PvdImage, ExtractBitsBudget) {
  const auto cover = synthetic::noise(16, 16, 5);
  const auto framed = frame_payload(synthetic::random_bytes(10, 6));
  const auto result = pvd::embed_bits(cover, framed, table());
  EXPECT_EQ(pvd::extract_bits(result.stego, table(), framed.size()), framed);
  EXPECT_THROW(pvd::extract_bits(result.stego, table(), 100000), PayloadError);
}
