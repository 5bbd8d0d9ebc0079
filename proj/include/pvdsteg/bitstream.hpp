#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace pvdsteg {

// One bit per element, each 0 or 1.
using BitString = std::vector<std::uint8_t>;

// A t-bit value read MSB-first from the payload stream.
struct Chunk {
  unsigned value = 0;
  int bits = 0;

  unsigned msb() const { return bits == 0 ? 0u : (value >> (bits - 1)) & 1u; }

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

Chunk chunk_from_string(const char* bits);

class PayloadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sequential MSB-first reader over a bit string.
class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bits) : bits_(bits) {}

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return bits_.size() - pos_; }
  bool exhausted() const { return pos_ == bits_.size(); }

  // Reads exactly t bits. Throws PayloadError if fewer remain.
  Chunk read_chunk(int t);

  // Reads t bits, zero-filling past the end of the stream. Returns nullopt
  // once the stream is exhausted; this is how embedding learns to stop.
  std::optional<Chunk> read_padded(int t);

 private:
  std::span<const std::uint8_t> bits_;
  std::size_t pos_ = 0;
};

void append_chunk(BitString& out, Chunk chunk);

// Number of bits in the length header that prefixes every framed payload.
inline constexpr std::size_t kHeaderBits = 32;

// 32-bit big-endian bit count followed by the message bits, MSB-first per
// byte. No tail padding: the embedder zero-fills the final block.
BitString frame_payload(std::span<const std::uint8_t> message);

// Reads the header's declared bit count. Requires at least kHeaderBits bits.
std::uint32_t read_header(std::span<const std::uint8_t> bits);

// Inverse of frame_payload. Trailing bits beyond the declared length are
// ignored. Throws PayloadError("truncated payload") if too few bits remain.
std::vector<std::uint8_t> deframe_payload(std::span<const std::uint8_t> bits);

}  // namespace pvdsteg
