#pragma once

#include <cstddef>
#include <string>

#include "pvdsteg/bitstream.hpp"

namespace pvdsteg::detail {

// Pulls chunks block by block until `budget` bits are collected.
template <class ExtractBlock>
BitString extract_bits(std::size_t blocks, std::size_t budget, ExtractBlock&& extract_block) {
  BitString bits;
  for (std::size_t i = 0; i < blocks && bits.size() < budget; ++i) append_chunk(bits, extract_block(i));
  if (bits.size() < budget)
    throw PayloadError("truncated payload: needed " + std::to_string(budget) + " bits, image yields " +
                       std::to_string(bits.size()));
  bits.resize(budget);
  return bits;
}

// Reads the length header, then the declared payload. No block carries more
// than 8 bits, which bounds what a header can sensibly claim.
template <class ExtractBlock>
std::vector<std::uint8_t> extract_message(std::size_t blocks, ExtractBlock&& extract_block) {
  BitString bits;
  std::size_t next = 0;
  while (next < blocks && bits.size() < kHeaderBits) append_chunk(bits, extract_block(next++));
  const std::uint64_t declared = read_header(bits);
  const std::uint64_t target = kHeaderBits + declared;
  if (target > static_cast<std::uint64_t>(blocks) * 8)
    throw PayloadError("header declares " + std::to_string(declared) + " bits, more than the image can hold");
  while (next < blocks && bits.size() < target) append_chunk(bits, extract_block(next++));
  return deframe_payload(bits);
}

}  // namespace pvdsteg::detail
