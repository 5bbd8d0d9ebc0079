#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvdsteg/image.hpp"

namespace pvdsteg::pgm {

enum class ParseErrc {
  bad_magic,
  bad_header,
  unsupported_maxval,
  zero_dimension,
  truncated,
  bad_pixel_value,
};

const char* to_string(ParseErrc code);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ParseErrc code() const { return code_; }

 private:
  ParseErrc code_;
};

enum class Variant { ascii, binary };

// Decodes a P2 or P5 image with maxval 255. '#' comments are accepted
// anywhere whitespace is allowed in the header (and between P2 samples).
GrayImage load(std::span<const std::uint8_t> bytes);

// Encodes without comments. Binary output uses a single '\n' after maxval.
std::vector<std::uint8_t> save(const GrayImage& img, Variant variant);

GrayImage read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const GrayImage& img, Variant variant = Variant::binary);

}  // namespace pvdsteg::pgm
