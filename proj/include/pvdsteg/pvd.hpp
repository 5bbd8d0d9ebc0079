#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvdsteg/bitstream.hpp"
#include "pvdsteg/image.hpp"
#include "pvdsteg/range_table.hpp"

namespace pvdsteg {

class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::uint64_t required_bits, std::uint64_t available_bits)
      : std::runtime_error("payload needs " + std::to_string(required_bits) + " bits but cover holds " +
                           std::to_string(available_bits) + " bits"),
        required_(required_bits),
        available_(available_bits) {}

  std::uint64_t required_bits() const { return required_; }
  std::uint64_t available_bits() const { return available_; }

 private:
  std::uint64_t required_;
  std::uint64_t available_;
};

// Sum of per-block bit counts over the cover. Identical for PVD and APVD
// because both read exactly t bits from every block.
std::uint64_t capacity_bits(const GrayImage& cover, const RangeTable& table);

}  // namespace pvdsteg

namespace pvdsteg::pvd {

// Moves p and q so that |q' - p'| == target, splitting the change m across
// both pixels:
//   p >= q, target >  d : (p + ceil(m/2),  q - floor(m/2))
//   p <  q, target >  d : (p - floor(m/2), q + ceil(m/2))
//   p >= q, target <= d : (p - ceil(m/2),  q + floor(m/2))
//   p <  q, target <= d : (p + floor(m/2), q - ceil(m/2))
// The result may leave [0,255] when the pixels diverge.
PixelPair realize_difference(int p, int q, int target);

struct BlockEmbedding {
  PixelPair stego;
  Range range;
  Chunk chunk;
  int new_difference = 0;
};

BlockEmbedding embed_block(int p, int q, Chunk chunk, const RangeTable& table);

// Reads the block's t bits from the cursor (zero-filled at the tail).
// Returns nullopt, leaving the block alone, once the cursor is exhausted.
std::optional<BlockEmbedding> embed_block(int p, int q, BitReader& cursor, const RangeTable& table);

// Requires |p' - q'| <= 255.
Chunk extract_block(PixelPair stego, const RangeTable& table);

struct Result {
  WideImage stego;
  std::size_t violations = 0;      // pixels outside [0,255]
  std::uint64_t bits_embedded = 0;  // framed bits, excluding tail padding
  std::size_t blocks_used = 0;
};

// Embeds an already-framed bit string. Throws CapacityError before touching
// anything if the bits do not fit.
Result embed_bits(const GrayImage& cover, std::span<const std::uint8_t> framed, const RangeTable& table);

// Frames the message and embeds it.
Result embed(const GrayImage& cover, std::span<const std::uint8_t> message, const RangeTable& table);

// Concatenated block extractions, stopping once bit_budget bits are produced
// (the last block's surplus is dropped). Throws PayloadError if the raster
// runs out of blocks first.
BitString extract_bits(const WideImage& stego, const RangeTable& table, std::size_t bit_budget);

// Reads the length header, then exactly the declared payload.
std::vector<std::uint8_t> extract(const WideImage& stego, const RangeTable& table);

}  // namespace pvdsteg::pvd
