#include "pvdsteg/pvd.hpp"

#include <cstdlib>

#include "framed_extract.hpp"

namespace pvdsteg {

std::uint64_t capacity_bits(const GrayImage& cover, const RangeTable& table) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < block_count(cover.size()); ++i)
    bits += static_cast<std::uint64_t>(table.locate(std::abs(cover[2 * i + 1] - cover[2 * i])).bits);
  return bits;
}

}  // namespace pvdsteg

namespace pvdsteg::pvd {

PixelPair realize_difference(int p, int q, int target) {
  const int d = std::abs(q - p);
  const int m = std::abs(target - d);
  const int floor_half = m / 2;
  const int ceil_half = m - floor_half;
  if (target > d) {
    if (p >= q) return {p + ceil_half, q - floor_half};
    return {p - floor_half, q + ceil_half};
  }
  if (p >= q) return {p - ceil_half, q + floor_half};
  return {p + floor_half, q - ceil_half};
}

BlockEmbedding embed_block(int p, int q, Chunk chunk, const RangeTable& table) {
  const Range& range = table.locate(std::abs(q - p));
  if (chunk.bits != range.bits)
    throw std::invalid_argument("block needs " + std::to_string(range.bits) + " bits, got " +
                                std::to_string(chunk.bits));
  const int target = range.lower + static_cast<int>(chunk.value);
  return {realize_difference(p, q, target), range, chunk, target};
}

std::optional<BlockEmbedding> embed_block(int p, int q, BitReader& cursor, const RangeTable& table) {
  const auto chunk = cursor.read_padded(table.locate(std::abs(q - p)).bits);
  if (!chunk) return std::nullopt;
  return embed_block(p, q, *chunk, table);
}

Chunk extract_block(PixelPair stego, const RangeTable& table) {
  const int d = std::abs(stego.first - stego.second);
  const Range& range = table.locate(d);
  return {static_cast<unsigned>(d - range.lower), range.bits};
}

Result embed_bits(const GrayImage& cover, std::span<const std::uint8_t> framed, const RangeTable& table) {
  const std::uint64_t available = capacity_bits(cover, table);
  if (framed.size() > available) throw CapacityError(framed.size(), available);

  Result result{WideImage(cover), 0, 0, 0};
  BitReader cursor(framed);
  for (const auto& block : block_sequence(cover)) {
    auto out = embed_block(block.pixels.first, block.pixels.second, cursor, table);
    if (!out) break;
    result.stego[block.index.first()] = out->stego.first;
    result.stego[block.index.second()] = out->stego.second;
    ++result.blocks_used;
  }
  result.bits_embedded = cursor.position();
  result.violations = result.stego.out_of_range_count();
  return result;
}

Result embed(const GrayImage& cover, std::span<const std::uint8_t> message, const RangeTable& table) {
  return embed_bits(cover, frame_payload(message), table);
}

BitString extract_bits(const WideImage& stego, const RangeTable& table, std::size_t bit_budget) {
  return detail::extract_bits(block_count(stego.size()), bit_budget, [&](std::size_t i) {
    return extract_block({stego[2 * i], stego[2 * i + 1]}, table);
  });
}

std::vector<std::uint8_t> extract(const WideImage& stego, const RangeTable& table) {
  return detail::extract_message(block_count(stego.size()), [&](std::size_t i) {
    return extract_block({stego[2 * i], stego[2 * i + 1]}, table);
  });
}

}  // namespace pvdsteg::pvd
