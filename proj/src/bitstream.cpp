#include "pvdsteg/bitstream.hpp"

#include <string>

namespace pvdsteg {

Chunk chunk_from_string(const char* bits) {
  Chunk c;
  for (const char* s = bits; *s; ++s) {
    if (*s != '0' && *s != '1') throw std::invalid_argument(std::string("not a bit string: ") + bits);
    c.value = (c.value << 1) | static_cast<unsigned>(*s - '0');
    ++c.bits;
  }
  return c;
}

Chunk BitReader::read_chunk(int t) {
  if (t < 0 || static_cast<std::size_t>(t) > remaining())
    throw PayloadError("bit stream exhausted: need " + std::to_string(t) + " bits, " +
                       std::to_string(remaining()) + " left");
  Chunk c{0, t};
  for (int i = 0; i < t; ++i) c.value = (c.value << 1) | (bits_[pos_++] & 1u);
  return c;
}

std::optional<Chunk> BitReader::read_padded(int t) {
  if (exhausted()) return std::nullopt;
  Chunk c{0, t};
  for (int i = 0; i < t; ++i) {
    const unsigned bit = pos_ < bits_.size() ? (bits_[pos_++] & 1u) : 0u;
    c.value = (c.value << 1) | bit;
  }
  return c;
}

void append_chunk(BitString& out, Chunk chunk) {
  for (int i = chunk.bits - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>((chunk.value >> i) & 1u));
}

BitString frame_payload(std::span<const std::uint8_t> message) {
  const std::uint64_t bit_count = static_cast<std::uint64_t>(message.size()) * 8;
  if (bit_count > 0xFFFFFFFFull) throw PayloadError("message too long for a 32-bit length header");
  BitString bits;
  bits.reserve(kHeaderBits + bit_count);
  append_chunk(bits, {static_cast<unsigned>(bit_count), static_cast<int>(kHeaderBits)});
  for (std::uint8_t byte : message) append_chunk(bits, {byte, 8});
  return bits;
}

std::uint32_t read_header(std::span<const std::uint8_t> bits) {
  if (bits.size() < kHeaderBits) throw PayloadError("truncated payload: missing length header");
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < kHeaderBits; ++i) v = (v << 1) | (bits[i] & 1u);
  return v;
}

std::vector<std::uint8_t> deframe_payload(std::span<const std::uint8_t> bits) {
  const std::uint64_t declared = read_header(bits);
  if (declared > bits.size() - kHeaderBits)
    throw PayloadError("truncated payload: header declares " + std::to_string(declared) + " bits, " +
                       std::to_string(bits.size() - kHeaderBits) + " available");
  std::vector<std::uint8_t> out((declared + 7) / 8, 0);
  for (std::uint64_t i = 0; i < declared; ++i)
    if (bits[kHeaderBits + i] & 1u) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  return out;
}

}  // namespace pvdsteg
