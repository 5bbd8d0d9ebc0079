#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pvdsteg/bitstream.hpp"
#include "pvdsteg/image.hpp"
#include "pvdsteg/metrics.hpp"
#include "pvdsteg/range_table.hpp"

// Adaptive pixel-value differencing. Embeds like PVD, but a block whose
// output would leave [0,255] first drops the chunk's leading 1 bit and, if
// that is not enough, loads the whole difference change onto the pixel that
// stays in range. Every data-carrying block is then marked so that the LSB
// of its first pixel tells the extractor whether a leading 1 was dropped.
namespace pvdsteg::apvd {

enum class Branch : std::uint8_t {
  plain,                   // PVD output already in range
  discard_resolved,        // dropping the leading 1 brought it into range
  one_sided,               // leading bit was 0; one pixel absorbs the change
  discard_then_one_sided,  // dropped the leading 1, still out, one-sided
};
inline constexpr std::size_t kBranchCount = 4;

std::string_view to_string(Branch b);

// Which row of the marking tables fired. Names read as
// <flag>_<first LSB><second LSB>_<action>.
enum class MarkCase : std::uint8_t {
  kept_even_even_raise_second,    // flag 0, LSBs 0 0
  kept_even_odd_raise_second,     // flag 0, LSBs 0 1, second < 255
  kept_even_odd_lower_both,       // flag 0, LSBs 0 1, first > 0, second = 255
  kept_even_odd_corner,           // flag 0, (0, 255): left untouched, lossy
  kept_odd_even_lower_first,      // flag 0, LSBs 1 0
  kept_odd_odd_lower_first,       // flag 0, LSBs 1 1
  dropped_even_even_raise_first,  // flag 1, LSBs 0 0
  dropped_even_odd_raise_first,   // flag 1, LSBs 0 1
  dropped_odd_even_lower_second,  // flag 1, LSBs 1 0, second > 0
  dropped_odd_even_raise_both,    // flag 1, LSBs 1 0, first < 255, second = 0
  dropped_odd_even_unmatched,     // flag 1, (255, 0): no row applies
  dropped_odd_odd_lower_second,   // flag 1, LSBs 1 1
};
inline constexpr std::size_t kMarkCaseCount = 12;

std::string_view to_string(MarkCase c);

struct MarkResult {
  PixelPair pixels;
  MarkCase row;
};

// Installs the flag into a block that has already been embedded.
MarkResult mark_flag(PixelPair pixels, int flag);

struct FlagReading {
  int flag = 0;
  int adjusted_first = 0;
};

// Inverse half of marking: the first pixel's LSB is the flag, and stepping
// the first pixel by one (up on 0, down on 1) restores the embedded difference.
FlagReading read_flag_and_adjust(PixelPair stego);

struct BlockOutcome {
  PixelPair cover;
  PixelPair pvd;       // plain PVD output for the full chunk, may be out of range
  PixelPair embedded;  // after overflow management, before marking
  PixelPair stego;     // after marking
  Range range;
  Chunk chunk;             // the t bits consumed from the stream
  int new_difference = 0;  // difference realized by `embedded`
  int flag = 0;
  Branch branch = Branch::plain;
  MarkCase mark = MarkCase::kept_even_even_raise_second;
  PixelPair distortion;  // |embedded - cover| per pixel
};

BlockOutcome embed_block(int p, int q, Chunk chunk, const RangeTable& table);

// Consumes the block's t bits (zero-filled at the tail). Returns nullopt,
// leaving the block alone, once the cursor is exhausted.
std::optional<BlockOutcome> embed_block(int p, int q, BitReader& cursor, const RangeTable& table);

// Always exactly t bits, the same t the embedder consumed.
Chunk extract_block(PixelPair stego, const RangeTable& table);

struct Report {
  GrayImage stego;
  std::uint64_t bits_embedded = 0;
  std::size_t blocks_used = 0;
  std::array<std::size_t, kBranchCount> branch_counts{};
  std::array<std::size_t, kMarkCaseCount> mark_counts{};
  std::size_t lossy_corner_count = 0;
  metrics::QualityReport quality;

  std::size_t branch_count(Branch b) const { return branch_counts[static_cast<std::size_t>(b)]; }
  std::size_t mark_count(MarkCase c) const { return mark_counts[static_cast<std::size_t>(c)]; }
};

Report embed_bits(const GrayImage& cover, std::span<const std::uint8_t> framed, const RangeTable& table);
Report embed(const GrayImage& cover, std::span<const std::uint8_t> message, const RangeTable& table);

BitString extract_bits(const GrayImage& stego, const RangeTable& table, std::size_t bit_budget);
std::vector<std::uint8_t> extract(const GrayImage& stego, const RangeTable& table);

}  // namespace pvdsteg::apvd
